#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcalc {

class ChainComplex;
class SparseIntMatrix;

/// A composite of degeneracy operators s_{i1} s_{i2} ... s_{ik}, applied right to left.
/// Always held in the normal form i1 > i2 > ... > ik; construction normalizes through
/// the identity s_i s_j = s_{j+1} s_i (i <= j).
class DegeneracyWord {
public:
    DegeneracyWord() = default;
    explicit DegeneracyWord(std::vector<int> ops);

    const std::vector<int>& ops() const { return ops_; }
    std::size_t size() const { return ops_.size(); }
    bool empty() const { return ops_.empty(); }
    bool contains(int i) const;

    /// s_outer ∘ s_this
    DegeneracyWord after(const DegeneracyWord& outer) const;

    std::string to_string() const;  // "" or "@s2s0"

    auto operator<=>(const DegeneracyWord&) const = default;

private:
    std::vector<int> ops_;
};

/// A possibly degenerate simplex s_word(g) with g a nondegenerate generator.
struct Simplex {
    int gen_dim = 0;
    int gen = 0;
    DegeneracyWord word;

    int dim() const { return gen_dim + static_cast<int>(word.size()); }
    bool nondegenerate() const { return word.empty(); }

    auto operator<=>(const Simplex&) const = default;
};

class SimplicialSetError : public std::runtime_error {
public:
    explicit SimplicialSetError(const std::string& what, std::string simplex = {})
        : std::runtime_error(what), simplex_(std::move(simplex))
    {
    }
    /// Name of the offending simplex, when there is one.
    const std::string& simplex() const { return simplex_; }

private:
    std::string simplex_;
};

/// Finite simplicial set presented by its nondegenerate simplices and their faces.
/// Immutable once built.
class SimplicialSet {
public:
    class Builder {
    public:
        int add_vertex(std::string name);
        /// faces.size() must equal dim + 1; each face of dimension dim - 1.
        int add_simplex(int dim, std::string name, std::vector<Simplex> faces);
        int count(int dim) const;
        SimplicialSet build() &&;

    private:
        std::vector<std::vector<std::string>> names_;
        std::vector<std::vector<std::vector<Simplex>>> faces_;
    };

    SimplicialSet() = default;

    /// Highest dimension with a nondegenerate simplex, -1 when empty.
    int dimension() const { return static_cast<int>(names_.size()) - 1; }
    int count(int dim) const;
    int total_cells() const;
    const std::string& name(int dim, int i) const { return names_[dim][i]; }
    std::optional<Simplex> find(const std::string& name) const;

    /// Faces of the nondegenerate generator (dim, i); dim >= 1.
    const std::vector<Simplex>& faces(int dim, int i) const { return faces_[dim][i]; }

    Simplex face(const Simplex& s, int i) const;
    Simplex degeneracy(const Simplex& s, int j) const;
    /// Front face s|[0..k] (Alexander–Whitney).
    Simplex front(const Simplex& s, int k) const;
    /// Back face s|[k..dim].
    Simplex back(const Simplex& s, int k) const;
    /// A vertex of s (its 0-th vertex).
    int vertex_of(const Simplex& s) const;

    static Simplex generator(int dim, int i) { return Simplex{dim, i, {}}; }
    /// The degenerate dim-simplex on vertex v.
    static Simplex degenerate_vertex(int v, int dim);

    long euler_characteristic() const;

    /// Throws SimplicialSetError naming the first simplex violating d_i d_j = d_{j-1} d_i.
    void check_identities() const;

    std::string to_string(const Simplex& s) const;

private:
    friend class Builder;
    std::vector<std::vector<std::string>> names_;
    std::vector<std::vector<std::vector<Simplex>>> faces_;
    std::map<std::string, Simplex> index_;
};

using SSetPtr = std::shared_ptr<const SimplicialSet>;

struct Basepoint {
    int vertex = 0;
};

struct BasedSet {
    SSetPtr space;
    Basepoint base;
};

/// A simplicial map, stored as the image of each nondegenerate source simplex.
class SMap {
public:
    SMap(SSetPtr source, SSetPtr target, std::vector<std::vector<Simplex>> images);

    static SMap identity(SSetPtr x);
    /// Constant map to the (degenerated) vertex v.
    static SMap constant(SSetPtr source, SSetPtr target, int v);

    const SSetPtr& source() const { return source_; }
    const SSetPtr& target() const { return target_; }
    const Simplex& image(int dim, int i) const { return images_[dim][i]; }
    Simplex apply(const Simplex& s) const;

    /// Injective on simplices: nondegenerate generators go to distinct nondegenerate generators.
    bool injective() const;

    SMap then(const SMap& next) const;  // next ∘ this

private:
    void check_faces() const;

    SSetPtr source_;
    SSetPtr target_;
    std::vector<std::vector<Simplex>> images_;
};

/// X' over X with retraction r and section s, r ∘ s = id.
struct RetractivePresentation {
    SSetPtr base;
    SSetPtr total;
    SMap retraction;
    SMap section;
};

// -- constructions -----------------------------------------------------------

SimplicialSet point();
SimplicialSet standard_simplex(int n);
SimplicialSet simplex_boundary(int n);

enum class SphereModel { paper, minimal };

/// paper: smash of n copies of Δ¹ ∪_{∂Δ¹} Δ¹ based at vertex 0 of ∂Δ¹; minimal: Δⁿ/∂Δⁿ.
BasedSet sphere_model(int n, SphereModel model = SphereModel::minimal);

/// Product with explicit pairing lookup.
class Product {
public:
    Product(SSetPtr a, SSetPtr b);

    const SSetPtr& object() const { return object_; }
    const SSetPtr& left() const { return a_; }
    const SSetPtr& right() const { return b_; }
    SMap projection_left() const;
    SMap projection_right() const;
    /// The simplex (x, y) of A x B; x and y must have equal dimension.
    Simplex pair(const Simplex& x, const Simplex& y) const;
    /// Components of a nondegenerate generator.
    std::pair<Simplex, Simplex> split(int dim, int i) const { return keys_[dim][i]; }

private:
    SSetPtr a_;
    SSetPtr b_;
    SSetPtr object_;
    std::vector<std::vector<std::pair<Simplex, Simplex>>> keys_;
    std::map<std::pair<Simplex, Simplex>, int> lookup_;
};

SimplicialSet product(const SimplicialSet& a, const SimplicialSet& b);
/// f x g : A x B -> C x D between already-built products.
SMap product_map(const Product& source, const Product& target, const SMap& f, const SMap& g);
/// (f, g) : T -> A x B
SMap pairing_map(const Product& target, const SMap& f, const SMap& g);

struct Coproduct {
    SSetPtr object;
    SMap left;
    SMap right;
};
Coproduct coproduct(SSetPtr a, SSetPtr b);
/// f ⊔ g
SMap coproduct_map(const Coproduct& source, const Coproduct& target, const SMap& f, const SMap& g);

/// Pushout of B <-f- A -g-> C. One of f, g must be injective (a cofibration).
/// Generators are those of B followed by the generators of C outside the image of A
/// (roles swapped when only f is injective).
class Pushout {
public:
    Pushout(const SMap& f, const SMap& g);

    const SSetPtr& object() const { return object_; }
    const SMap& from_b() const { return *from_b_; }
    const SMap& from_c() const { return *from_c_; }
    /// The map out of the pushout induced by hb : B -> T and hc : C -> T.
    SMap induced(const SMap& hb, const SMap& hc) const;

private:
    SSetPtr object_;
    std::optional<SMap> from_b_;
    std::optional<SMap> from_c_;
    bool swapped_ = false;
};

/// Subcomplex spanned by the listed generators (closed under faces) with its inclusion.
SMap subcomplex(SSetPtr x, const std::vector<std::vector<bool>>& keep);
/// X / K for a subcomplex K; returns the quotient map.
SMap collapse(SSetPtr x, const std::vector<std::vector<bool>>& keep);

RetractivePresentation wedge_at(SSetPtr x, Basepoint xb, SSetPtr t, Basepoint tb);

BasedSet smash(const BasedSet& a, const BasedSet& b);

/// Reduced cone A ∧ Δ¹ with Δ¹ based at vertex 1; includes A at the free end.
struct ReducedCone {
    BasedSet cone;
    SMap inclusion;
};
ReducedCone reduced_cone(const BasedSet& a);

struct FiberwiseSuspension {
    SSetPtr cone;          // C_X X'
    SSetPtr suspension;    // S_X X'
    SMap cone_to_base;     // C_X X' -> X
    SMap to_base;          // S_X X' -> X
    SMap total_in_cone;    // X' -> C_X X' at the free end
    SMap cone_first;       // first copy of the cone into S_X X'
    SMap cone_second;      // second copy
};
FiberwiseSuspension fiberwise_suspension(const SMap& p);

struct Component {
    int basepoint = 0;                      // lowest-index vertex
    std::vector<std::vector<int>> members;  // per dimension, generator indices
};
std::vector<Component> components(const SimplicialSet& x);
/// Component index of every generator, per dimension.
std::vector<std::vector<int>> component_labels(const SimplicialSet& x);
/// The component as a standalone set with its inclusion into x.
SMap component_inclusion(SSetPtr x, const Component& c);

/// Collapse a spanning tree of a connected set; result has a single vertex.
/// The quotient map sends the basepoint to that vertex.
SMap reduce_at(SSetPtr x, Basepoint b);

/// One vertex and no nondegenerate 1-simplices.
bool is_one_reduced(const SimplicialSet& x);

/// Normalized chains. With a basepoint and reduced = true, chains relative to it.
ChainComplex normalized_chains(const SimplicialSet& x, int top, std::optional<Basepoint> reduced = {});

/// Components in degrees 0..top of the map induced on unreduced normalized chains.
std::vector<SparseIntMatrix> induced_chain_map(const SMap& f, int top);

}  // namespace gcalc
