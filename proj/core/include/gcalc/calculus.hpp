#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcalc/chains.hpp"
#include "gcalc/dga.hpp"
#include "gcalc/sset.hpp"

namespace gcalc {

/// Malformed request: Q where a finite model is needed, positive-dimensional K, bad window.
class CalculusError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input outside what the chain models can handle (fundamental group, Q in inner position).
class UnsupportedInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FunctorExpr;
using ExprPtr = std::shared_ptr<const FunctorExpr>;

struct FunctorExpr {
    enum class Kind { id, map_from, q_plus, disjoint_union, compose };

    Kind kind = Kind::id;
    SSetPtr space;       // K for map_from, C for disjoint_union
    std::string source;  // how the space was named, for printing
    ExprPtr outer;
    ExprPtr inner;

    static ExprPtr identity();
    static ExprPtr q_plus();
    /// K must be 0-dimensional.
    static ExprPtr map_from(SSetPtr k, std::string source);
    static ExprPtr disjoint_union(SSetPtr c, std::string source);
    static ExprPtr compose(ExprPtr outer, ExprPtr inner);

    int points() const { return space ? space->count(0) : 0; }
    bool contains_q() const;
    /// Canonical text, e.g. "Q o Map(k2.sset)".
    std::string to_string() const;
};

/// Primitive terms of a composite, outermost first.
std::vector<ExprPtr> flatten(const ExprPtr& f);

/// F(X) as a simplicial set. Throws CalculusError for Q.
SSetPtr value(const FunctorExpr& f, const SSetPtr& x);
/// F(g) : F(A) -> F(B).
SMap apply(const FunctorExpr& f, const SMap& g);

// -- symbolic components ----------------------------------------------------------------

/// Component of a functor value: a connected component of X or of some C (an atom), or a
/// product of components. An empty product is a point.
struct Shape {
    int atom = -1;
    std::vector<Shape> parts;
    bool stable = false;  // the single component of Q(-)

    bool is_atom() const { return atom >= 0; }
    std::string key() const;
    bool operator==(const Shape&) const = default;
};

struct Atom {
    SSetPtr space;  // the component on its own
    Basepoint base;
    std::string label;
};

/// Atoms, the shapes of functor values, and a per-shape cache of loop algebras.
class ComponentModel {
public:
    /// X is split into components; x's component is the base atom.
    ComponentModel(const SSetPtr& x, Basepoint xb, int top);

    int top() const { return top_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::vector<Shape>& input() const { return input_; }
    int base_component() const { return base_component_; }
    int base_atom() const { return input_[base_component_].atom; }

    /// Components of f(Y) for Y with components ys.
    std::vector<Shape> apply(const FunctorExpr& f, const std::vector<Shape>& ys);
    /// Where component b of Y lands in f(Y).
    int image_of(const FunctorExpr& f, const std::vector<Shape>& ys, int b);

    std::string label(const Shape& s) const;
    /// Occurrences of atom a in s.
    int count_atom(const Shape& s, int a) const;

    /// Cobar of the reduced atom, tensor products for products, Z for points and Q.
    AlgebraPtr loop_algebra(const Shape& s);

private:
    int register_atoms(const SSetPtr& space, const std::string& label);

    int top_;
    std::vector<Atom> atoms_;
    std::vector<Shape> input_;
    int base_component_ = 0;
    std::map<const FunctorExpr*, int> union_atoms_;  // first atom of each Union node
    std::map<std::string, AlgebraPtr> algebras_;
};

// -- derivatives -----------------------------------------------------------------------------

/// One summand of a derivative: a bimodule over (outer component algebra, inner base algebra).
struct DerivativeModel {
    std::string component;  // the middle component for a composite, the codomain component otherwise
    bool zero = true;
    std::optional<DgModule> module;
    int lo = 0;
    int hi = -1;

    GradedAbelianGroup homology() const;
};

struct DerivativeRequest {
    int lo = 0;
    int hi = 0;
    std::optional<int> z_component;  // default: the image of x's component
};

/// Formula route: regular bimodule for Id and Union, coordinate sums for Map, trivial Z for Q,
/// two-sided bar over the middle loop algebra for composites (one summand per middle component).
std::vector<DerivativeModel> derivative_model(const FunctorExpr& f, const SSetPtr& x, Basepoint xb,
                                              const DerivativeRequest& req);

/// H̃_{*+n} of the cofiber of f(X) -> f(X ∨ Sⁿ), on degrees lo..hi; needs n >= hi + 2.
GradedAbelianGroup stable_cofiber_oracle(const FunctorExpr& f, const SSetPtr& x, Basepoint xb, int n, int lo, int hi);

/// H_* of the homotopy fiber of f(X ∨ Sⁿ) -> f(X) over the selected component, lo..hi,
/// from Eilenberg–Moore chains of X ∨ Sⁿ -> X (one tensor factor per copy of x's component).
GradedAbelianGroup em_derivative_oracle(const FunctorExpr& f, const SSetPtr& x, Basepoint xb, int n, int lo, int hi,
                                        std::optional<int> z_component = {});

enum class Provenance { stable_cofiber, eilenberg_moore, formula, bar };
std::string to_string(Provenance p);

struct ComponentTerm {
    std::string component;
    bool zero = true;
    GradedAbelianGroup homology;
    std::vector<int> bar_ranks;  // ranks of B(∂e, A_β, ∂f) by degree
};

struct ChainRuleReport {
    std::string outer;
    std::string inner;
    int lo = 0;
    int hi = 0;
    int suspension = 0;

    GradedAbelianGroup lhs;
    Provenance lhs_route = Provenance::formula;
    std::vector<ComponentTerm> components;
    GradedAbelianGroup rhs;
    GradedComparison comparison;

    double lhs_seconds = 0;
    double rhs_seconds = 0;

    bool equal() const { return comparison.equal; }
    std::string to_text(bool timings = false) const;
};

struct ChainRuleOptions {
    int lo = 0;
    int hi = 0;
    std::optional<int> suspension;  // default hi + 2
    std::optional<int> z_component;
};

/// LHS by an oracle independent of the bar machinery where one applies, RHS by the
/// two-sided bar per middle component, compared degreewise.
ChainRuleReport chain_rule_check(const ExprPtr& e, const ExprPtr& f, const SSetPtr& x, Basepoint xb,
                                 const ChainRuleOptions& opt);

/// A square X₁ <- X₀ -> X₂ completed by its pushout X₃.
struct Square {
    SMap to_first;   // X₀ -> X₁
    SMap to_second;  // X₀ -> X₂
};

/// X₀ = A, X₁ = X₂ = reduced cone on A; the pushout is the reduced suspension.
Square suspension_square(const BasedSet& a);

struct ExcisionReport {
    std::optional<int> first_mismatch;
    GradedAbelianGroup fiber_02;  // hofib(F X₀ -> F X₂)
    GradedAbelianGroup fiber_13;  // hofib(F X₁ -> F X₃)
    int lo = 0;
    int hi = 0;
};

/// First degree where the homology of hofib(F X₀ -> F X₂) and hofib(F X₁ -> F X₃) differ.
ExcisionReport excision_defect(const FunctorExpr& f, const Square& square, int lo, int hi);

/// H_* B(A, A, M) against H_* M on lo..hi.
GradedComparison bar_theta_check(const AlgebraPtr& a, const DgModule& m, int lo, int hi);

}  // namespace gcalc
