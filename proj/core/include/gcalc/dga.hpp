#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcalc/chains.hpp"
#include "gcalc/sset.hpp"

namespace gcalc {

class DgaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a construction needs a 1-reduced simplicial set.
class NotReducedError : public DgaError {
public:
    NotReducedError(const std::string& what, std::string simplex)
        : DgaError(what), simplex_(std::move(simplex))
    {
    }
    const std::string& simplex() const { return simplex_; }

private:
    std::string simplex_;
};

/// A basis element: degree and index within that degree.
struct BasisRef {
    int deg = 0;
    int idx = 0;
    auto operator<=>(const BasisRef&) const = default;
};

class DgAlgebra;
using AlgebraPtr = std::shared_ptr<const DgAlgebra>;

/// Connected dg algebra over Z: degree 0 is Z spanned by the unit (0, 0), augmentation
/// the projection onto it. Multiplication is given on basis pairs and truncated at top.
class DgAlgebra {
public:
    using Product = std::function<SparseVector(BasisRef, BasisRef)>;

    DgAlgebra(std::string label, ChainComplex chains, Product mul, std::vector<std::vector<std::string>> names = {});

    const std::string& label() const { return label_; }
    const ChainComplex& chains() const { return chains_; }
    int top() const { return chains_.top(); }
    int rank(int d) const { return chains_.rank(d); }

    /// a·b in degree |a| + |b|; empty beyond top.
    SparseVector multiply(BasisRef a, BasisRef b) const;
    Coeff augmentation(BasisRef a) const { return (a.deg == 0 && a.idx == 0) ? 1 : 0; }

    /// Tensor factors, empty unless built by tensor_product.
    const std::vector<AlgebraPtr>& factors() const { return factors_; }
    int factor_count() const { return factors_.empty() ? 1 : static_cast<int>(factors_.size()); }
    /// Coordinates of a basis element in the factors; a single entry for non-tensor algebras.
    std::vector<BasisRef> decompose(BasisRef a) const;

    std::string basis_name(BasisRef a) const;

    /// Checks unit, Leibniz and associativity on all basis tuples of total degree <= max_degree
    /// (default: top). Returns a description of the first failure.
    std::optional<std::string> verify(std::optional<int> max_degree = {}) const;

private:
    friend AlgebraPtr tensor_product(const std::vector<AlgebraPtr>& factors);

    std::string label_;
    ChainComplex chains_;
    Product mul_;
    std::vector<std::vector<std::string>> names_;
    std::vector<AlgebraPtr> factors_;
    std::function<std::vector<BasisRef>(BasisRef)> decompose_;
};

/// Z in degree 0.
AlgebraPtr trivial_algebra(int top);

/// Cobar construction on the normalized chains of a 1-reduced simplicial set: the tensor
/// algebra on s⁻¹σ (σ nondegenerate, dim σ >= 2, |s⁻¹σ| = dim σ - 1) with differential
/// d(s⁻¹σ) = -s⁻¹∂σ + Σ_{0<i<n} (-1)^i s⁻¹σ|[0..i] · s⁻¹σ|[i..n].
/// Homology agrees with that of the loop space below top.
AlgebraPtr cobar(const SimplicialSet& x, int top);

/// A₁ ⊗ ... ⊗ A_k with (a ⊗ b)(a' ⊗ b') = (-1)^{|b||a'|} aa' ⊗ bb'; top is the minimum.
AlgebraPtr tensor_product(const std::vector<AlgebraPtr>& factors);

enum class Side { left, right };

struct ModuleAction {
    AlgebraPtr algebra;
    /// (a, m) -> a·m for a left action, m·a for a right action.
    std::function<SparseVector(BasisRef a, BasisRef m)> act;
};

/// Chain complex with optional left and right actions. With both present this is a
/// bimodule and the actions are required to commute.
class DgModule {
public:
    DgModule(std::string label, ChainComplex chains, std::optional<ModuleAction> left,
             std::optional<ModuleAction> right);

    /// All ranks zero; carries the algebras so it can sit in any slot.
    static DgModule zero(AlgebraPtr left, AlgebraPtr right, int top);

    const std::string& label() const { return label_; }
    const ChainComplex& chains() const { return chains_; }
    int top() const { return chains_.top(); }
    bool is_zero() const;

    const AlgebraPtr& left_algebra() const;
    const AlgebraPtr& right_algebra() const;
    bool has_left() const { return left_.has_value(); }
    bool has_right() const { return right_.has_value(); }

    SparseVector act_left(BasisRef a, BasisRef m) const;
    SparseVector act_right(BasisRef m, BasisRef a) const;

    std::optional<std::string> verify(std::optional<int> max_degree = {}) const;

private:
    std::string label_;
    ChainComplex chains_;
    std::optional<ModuleAction> left_;
    std::optional<ModuleAction> right_;
    static const AlgebraPtr none_;
};

using DgBimodule = DgModule;

/// A acting on itself from both sides.
DgModule regular_bimodule(const AlgebraPtr& a);

/// Actions through the augmentation. Either algebra may be null (no action on that side).
DgModule trivial_module(const AlgebraPtr& left, const AlgebraPtr& right, const ChainComplex& c);
DgModule trivial_module(const AlgebraPtr& a, const ChainComplex& c, Side side);

/// ⊕_i M_i over a tensor algebra T = A_1 ⊗ ... ⊗ A_k: T acts on a summand (c, M) through
/// coordinate c and the augmentation elsewhere. All summands share one right algebra.
DgModule coordinate_sum_module(const AlgebraPtr& tensor, const std::vector<std::pair<int, DgModule>>& summands,
                               const AlgebraPtr& right);

/// Summand i acted on through the i-th factor of ⊗_i A_i.
DgModule coordinate_sum_module(const std::vector<AlgebraPtr>& algebras, const std::vector<DgModule>& modules);

/// Requires matching algebras on both sides.
DgModule direct_sum(const DgModule& a, const DgModule& b);

/// Chains on the homotopy fiber of p : E -> B with B 1-reduced: C(E) ⊗ T(s⁻¹C̄B) with the
/// differential ∂e ⊗ w + Σ_i (-1)^{i+1} e|[0..i] ⊗ s⁻¹p(e|[i..n])·w + (-1)^{|e|} e ⊗ dw. Trusted below top.
ChainComplex em_fiber(const SMap& p, int top);

/// Two-sided bar construction B(R, A, L) with basis r[a₁|...|a_p]l, a_i of positive degree,
/// |r[a₁|...|a_p]l| = |r| + Σ(|a_i| + 1) + |l|.
ChainComplex two_sided_bar(const DgModule& r, const AlgebraPtr& a, const DgModule& l, int top);

/// B(R, A, L) with the left action of R and the right action of L.
DgModule bar_bimodule(const DgModule& r, const AlgebraPtr& a, const DgModule& l, int top);

}  // namespace gcalc
