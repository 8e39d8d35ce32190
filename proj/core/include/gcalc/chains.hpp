#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gcalc {

using Coeff = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

/// Sorted by index, no zero entries.
using SparseVector = std::vector<std::pair<int, Coeff>>;

/// (-1)^(a*b)
constexpr int koszul_sign(int a, int b) { return ((a & 1) && (b & 1)) ? -1 : 1; }
constexpr int parity_sign(int a) { return (a & 1) ? -1 : 1; }

/// Accumulates sparse linear combinations.
class VectorBuilder {
public:
    void add(int index, Coeff c);
    void add(const SparseVector& v, Coeff scale);
    SparseVector take();
    bool empty() const { return terms_.empty(); }

private:
    std::vector<std::pair<int, Coeff>> terms_;
};

class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class SparseIntMatrix {
public:
    SparseIntMatrix() = default;
    SparseIntMatrix(int rows, int cols);

    static SparseIntMatrix from_triplets(int rows, int cols,
                                         const std::vector<std::tuple<int, int, Coeff>>& entries);
    static SparseIntMatrix from_dense(const std::vector<std::vector<Coeff>>& rows);
    static SparseIntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return static_cast<int>(columns_.size()); }
    const SparseVector& column(int c) const { return columns_[c]; }
    void set_column(int c, SparseVector v);
    Coeff at(int r, int c) const;
    std::size_t nonzeros() const;
    bool is_zero() const;

    SparseIntMatrix operator*(const SparseIntMatrix& rhs) const;
    SparseIntMatrix scaled(Coeff s) const;
    bool operator==(const SparseIntMatrix&) const = default;

private:
    int rows_ = 0;
    std::vector<SparseVector> columns_;
};

/// Invariant factors d1 | d2 | ... of the nonzero part of the Smith normal form.
std::vector<BigInt> smith_normal_form(const SparseIntMatrix& m);
int matrix_rank(const SparseIntMatrix& m);

struct HomologyGroup {
    int betti = 0;
    std::vector<BigInt> torsion;

    bool is_zero() const { return betti == 0 && torsion.empty(); }
    std::string to_string() const;  // "Z^2 + Z/2", "0"
    bool operator==(const HomologyGroup&) const = default;
};

HomologyGroup direct_sum(const HomologyGroup& a, const HomologyGroup& b);

/// Finitely generated graded abelian group on the degree window [lo, hi].
class GradedAbelianGroup {
public:
    GradedAbelianGroup() = default;
    GradedAbelianGroup(int lo, int hi);

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool covers(int lo, int hi) const { return lo >= lo_ && hi <= hi_; }
    const HomologyGroup& at(int d) const;
    HomologyGroup& at(int d);
    void set(int d, HomologyGroup g) { at(d) = std::move(g); }
    bool is_zero() const;

    GradedAbelianGroup restricted(int lo, int hi) const;
    /// Degree d of the result is degree d + n of this group.
    GradedAbelianGroup shifted_down(int n) const;

    /// One "H_d = ..." line per degree.
    std::string to_string() const;

    bool operator==(const GradedAbelianGroup&) const = default;

private:
    int lo_ = 0;
    int hi_ = -1;
    std::vector<HomologyGroup> groups_;
};

GradedAbelianGroup direct_sum(const GradedAbelianGroup& a, const GradedAbelianGroup& b);

/// Ranks on degrees 0..top; boundary(d) : C_d -> C_{d-1} for 1 <= d <= top.
class ChainComplex {
public:
    ChainComplex() = default;
    explicit ChainComplex(int top);
    ChainComplex(std::vector<int> ranks, std::vector<SparseIntMatrix> boundaries);

    int top() const { return top_; }
    int rank(int d) const { return (d < 0 || d > top_) ? 0 : ranks_[d]; }
    const std::vector<int>& ranks() const { return ranks_; }
    /// Zero matrix for d <= 0.
    const SparseIntMatrix& boundary(int d) const;

    /// Throws std::logic_error on a shape mismatch or nonzero ∂∘∂.
    void check() const;
    bool boundary_squares_to_zero() const;

    long euler_characteristic(int lo, int hi) const;

    /// Requires hi < top.
    GradedAbelianGroup homology(int lo, int hi) const;

    ChainComplex truncated(int top) const;

private:
    int top_ = -1;
    std::vector<int> ranks_;
    std::vector<SparseIntMatrix> boundaries_;  // index d, entry 0 unused
    SparseIntMatrix empty_;
};

GradedAbelianGroup homology_range(const ChainComplex& c, int lo, int hi);

/// f_d : C_d -> D_d for 0 <= d <= min(C.top, D.top).
struct ChainMap {
    const ChainComplex* source = nullptr;
    const ChainComplex* target = nullptr;
    std::vector<SparseIntMatrix> components;

    bool commutes() const;
};

/// Cone(f)_d = D_d ⊕ C_{d-1}, ∂(y, x) = (∂y + f x, -∂x).
ChainComplex mapping_cone(const ChainMap& f);

struct GradedComparison {
    bool equal = true;
    std::optional<int> degree;
    HomologyGroup left;
    HomologyGroup right;

    std::string to_string() const;
};

GradedComparison compare_graded(const GradedAbelianGroup& a, const GradedAbelianGroup& b, int lo, int hi);

/// Graded tensor with ∂(c ⊗ d) = ∂c ⊗ d + (-1)^|c| c ⊗ ∂d, truncated at top.
/// Basis of degree n ordered by (p, index in C_p, index in D_{n-p}) with p ascending.
ChainComplex tensor(const ChainComplex& c, const ChainComplex& d, int top);

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

/// Z in degree 0, zero elsewhere.
ChainComplex unit_complex(int top);

}  // namespace gcalc
