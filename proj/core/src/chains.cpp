#include "gcalc/chains.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace gcalc {

// -- VectorBuilder ---------------------------------------------------------------

void VectorBuilder::add(int index, Coeff c)
{
    if (c != 0)
        terms_.emplace_back(index, c);
}

void VectorBuilder::add(const SparseVector& v, Coeff scale)
{
    if (scale == 0)
        return;
    for (const auto& [i, c] : v)
        terms_.emplace_back(i, c * scale);
}

SparseVector VectorBuilder::take()
{
    std::sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector out;
    for (const auto& [i, c] : terms_) {
        if (!out.empty() && out.back().first == i)
            out.back().second += c;
        else
            out.emplace_back(i, c);
        if (out.back().second == 0)
            out.pop_back();
    }
    terms_.clear();
    return out;
}

// -- SparseIntMatrix -------------------------------------------------------------

SparseIntMatrix::SparseIntMatrix(int rows, int cols) : rows_(rows), columns_(static_cast<std::size_t>(cols)) {}

SparseIntMatrix SparseIntMatrix::from_triplets(int rows, int cols,
                                               const std::vector<std::tuple<int, int, Coeff>>& entries)
{
    SparseIntMatrix m(rows, cols);
    std::vector<VectorBuilder> builders(cols);
    for (const auto& [r, c, v] : entries) {
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw RangeError("matrix entry out of range");
        builders[c].add(r, v);
    }
    for (int c = 0; c < cols; ++c)
        m.columns_[c] = builders[c].take();
    return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<Coeff>>& rows)
{
    int nr = static_cast<int>(rows.size());
    int nc = nr ? static_cast<int>(rows[0].size()) : 0;
    std::vector<std::tuple<int, int, Coeff>> t;
    for (int r = 0; r < nr; ++r)
        for (int c = 0; c < nc; ++c)
            if (rows[r][c] != 0)
                t.emplace_back(r, c, rows[r][c]);
    return from_triplets(nr, nc, t);
}

SparseIntMatrix SparseIntMatrix::identity(int n)
{
    SparseIntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.columns_[i] = {{i, 1}};
    return m;
}

void SparseIntMatrix::set_column(int c, SparseVector v)
{
    for (const auto& [r, x] : v)
        if (r < 0 || r >= rows_ || x == 0)
            throw RangeError("bad sparse column entry");
    columns_[c] = std::move(v);
}

Coeff SparseIntMatrix::at(int r, int c) const
{
    const auto& col = columns_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, int row) { return e.first < row; });
    return (it != col.end() && it->first == r) ? it->second : 0;
}

std::size_t SparseIntMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& c : columns_)
        n += c.size();
    return n;
}

bool SparseIntMatrix::is_zero() const
{
    return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

SparseIntMatrix SparseIntMatrix::operator*(const SparseIntMatrix& rhs) const
{
    if (cols() != rhs.rows())
        throw RangeError("matrix shape mismatch in product");
    SparseIntMatrix out(rows_, rhs.cols());
    for (int c = 0; c < rhs.cols(); ++c) {
        VectorBuilder b;
        for (const auto& [k, v] : rhs.columns_[c])
            b.add(columns_[k], v);
        out.columns_[c] = b.take();
    }
    return out;
}

SparseIntMatrix SparseIntMatrix::scaled(Coeff s) const
{
    SparseIntMatrix out(rows_, cols());
    if (s == 0)
        return out;
    for (int c = 0; c < cols(); ++c) {
        out.columns_[c] = columns_[c];
        for (auto& e : out.columns_[c])
            e.second *= s;
    }
    return out;
}

// -- Smith normal form ----------------------------------------------------------

namespace {

struct Overflow {};

Coeff sub_mul(Coeff a, Coeff q, Coeff b)
{
    Coeff prod, out;
    if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out))
        throw Overflow{};
    return out;
}

BigInt sub_mul(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }

Coeff abs_value(Coeff a)
{
    if (a == std::numeric_limits<Coeff>::min())
        throw Overflow{};
    return a < 0 ? -a : a;
}

BigInt abs_value(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

/// Diagonalization by unimodular row and column operations; returns |diagonal|.
template <class T>
std::vector<T> diagonalize(const SparseIntMatrix& m)
{
    const int nr = m.rows(), nc = m.cols();
    std::vector<std::map<int, T>> rows(nr);
    std::vector<std::set<int>> cols(nc);
    for (int c = 0; c < nc; ++c)
        for (const auto& [r, v] : m.column(c)) {
            rows[r][c] = T(v);
            cols[c].insert(r);
        }

    auto set_entry = [&](int r, int c, const T& v) {
        if (v == 0) {
            rows[r].erase(c);
            cols[c].erase(r);
        }
        else {
            rows[r][c] = v;
            cols[c].insert(r);
        }
    };

    std::vector<T> diag;
    while (true) {
        // minimal absolute value, ties broken by (row, col)
        int pr = -1, pc = -1;
        T best = 0;
        for (int r = 0; r < nr && !(pr >= 0 && best == 1); ++r) {
            for (const auto& [c, v] : rows[r]) {
                T a = abs_value(v);
                if (pr < 0 || a < best) {
                    pr = r;
                    pc = c;
                    best = a;
                    if (best == 1)
                        break;
                }
            }
        }
        if (pr < 0)
            break;

        while (true) {
            bool again = false;
            const T p = rows[pr].at(pc);
            std::vector<int> others(cols[pc].begin(), cols[pc].end());
            const std::vector<std::pair<int, T>> pivot_row(rows[pr].begin(), rows[pr].end());
            for (int r2 : others) {
                if (r2 == pr)
                    continue;
                T q = rows[r2].at(pc) / p;
                if (q != 0)
                    for (const auto& [c, v] : pivot_row) {
                        auto it = rows[r2].find(c);
                        T cur = it == rows[r2].end() ? T(0) : it->second;
                        set_entry(r2, c, sub_mul(cur, q, v));
                    }
                if (rows[r2].count(pc))
                    again = true;
            }
            std::vector<int> ocols;
            for (const auto& [c, v] : rows[pr])
                if (c != pc)
                    ocols.push_back(c);
            const std::vector<int> pivot_col(cols[pc].begin(), cols[pc].end());
            for (int c2 : ocols) {
                T q = rows[pr].at(c2) / p;
                if (q != 0)
                    for (int r3 : pivot_col) {
                        T src = rows[r3].at(pc);
                        auto it = rows[r3].find(c2);
                        T cur = it == rows[r3].end() ? T(0) : it->second;
                        set_entry(r3, c2, sub_mul(cur, q, src));
                    }
                if (rows[pr].count(c2))
                    again = true;
            }
            if (!again)
                break;
            // remainders sit in the pivot row or column, strictly smaller than |p|
            T small = abs_value(p);
            int next_r = pr, next_c = pc;
            for (const auto& [c, v] : rows[pr])
                if (abs_value(v) < small) {
                    small = abs_value(v);
                    next_r = pr;
                    next_c = c;
                }
            for (int r : cols[pc])
                if (abs_value(rows[r].at(pc)) < small) {
                    small = abs_value(rows[r].at(pc));
                    next_r = r;
                    next_c = pc;
                }
            pr = next_r;
            pc = next_c;
        }
        diag.push_back(abs_value(rows[pr].at(pc)));
        for (const auto& [c, v] : std::vector<std::pair<int, T>>(rows[pr].begin(), rows[pr].end()))
            set_entry(pr, c, T(0));
        for (int r : std::vector<int>(cols[pc].begin(), cols[pc].end()))
            set_entry(r, pc, T(0));
    }
    return diag;
}

std::vector<BigInt> canonical_factors(std::vector<BigInt> d)
{
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            BigInt g = boost::multiprecision::gcd(d[i], d[j]);
            if (g == 0)
                continue;
            BigInt l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<BigInt> diagonal_of(const SparseIntMatrix& m)
{
    std::vector<BigInt> out;
    try {
        for (Coeff v : diagonalize<Coeff>(m))
            out.emplace_back(v);
    }
    catch (const Overflow&) {
        out = diagonalize<BigInt>(m);
    }
    return out;
}

std::vector<BigInt> canonical_torsion(std::vector<BigInt> t)
{
    auto f = canonical_factors(std::move(t));
    std::vector<BigInt> out;
    for (auto& x : f)
        if (x > 1)
            out.push_back(x);
    return out;
}

}  // namespace

std::vector<BigInt> smith_normal_form(const SparseIntMatrix& m)
{
    return canonical_factors(diagonal_of(m));
}

int matrix_rank(const SparseIntMatrix& m)
{
    return static_cast<int>(diagonal_of(m).size());
}

// -- graded groups ----------------------------------------------------------------

std::string HomologyGroup::to_string() const
{
    std::vector<std::string> terms;
    if (betti == 1)
        terms.emplace_back("Z");
    else if (betti > 1)
        terms.push_back("Z^" + std::to_string(betti));
    for (const auto& t : torsion)
        terms.push_back("Z/" + t.str());
    if (terms.empty())
        return "0";
    std::string s = terms[0];
    for (std::size_t i = 1; i < terms.size(); ++i)
        s += " + " + terms[i];
    return s;
}

HomologyGroup direct_sum(const HomologyGroup& a, const HomologyGroup& b)
{
    HomologyGroup out;
    out.betti = a.betti + b.betti;
    std::vector<BigInt> t = a.torsion;
    t.insert(t.end(), b.torsion.begin(), b.torsion.end());
    out.torsion = canonical_torsion(std::move(t));
    return out;
}

GradedAbelianGroup::GradedAbelianGroup(int lo, int hi) : lo_(lo), hi_(hi)
{
    if (hi >= lo)
        groups_.resize(static_cast<std::size_t>(hi - lo + 1));
}

const HomologyGroup& GradedAbelianGroup::at(int d) const
{
    if (d < lo_ || d > hi_)
        throw RangeError("degree " + std::to_string(d) + " outside graded group window");
    return groups_[d - lo_];
}

HomologyGroup& GradedAbelianGroup::at(int d)
{
    if (d < lo_ || d > hi_)
        throw RangeError("degree " + std::to_string(d) + " outside graded group window");
    return groups_[d - lo_];
}

bool GradedAbelianGroup::is_zero() const
{
    return std::all_of(groups_.begin(), groups_.end(), [](const auto& g) { return g.is_zero(); });
}

GradedAbelianGroup GradedAbelianGroup::restricted(int lo, int hi) const
{
    GradedAbelianGroup out(lo, hi);
    for (int d = lo; d <= hi; ++d)
        out.at(d) = at(d);
    return out;
}

GradedAbelianGroup GradedAbelianGroup::shifted_down(int n) const
{
    GradedAbelianGroup out(lo_ - n, hi_ - n);
    out.groups_ = groups_;
    return out;
}

std::string GradedAbelianGroup::to_string() const
{
    std::ostringstream os;
    for (int d = lo_; d <= hi_; ++d)
        os << "H_" << d << " = " << at(d).to_string() << "\n";
    return os.str();
}

GradedAbelianGroup direct_sum(const GradedAbelianGroup& a, const GradedAbelianGroup& b)
{
    if (a.lo() != b.lo() || a.hi() != b.hi())
        throw RangeError("direct sum of graded groups on different windows");
    GradedAbelianGroup out(a.lo(), a.hi());
    for (int d = a.lo(); d <= a.hi(); ++d)
        out.at(d) = direct_sum(a.at(d), b.at(d));
    return out;
}

// -- ChainComplex ---------------------------------------------------------------------

ChainComplex::ChainComplex(int top) : top_(top), ranks_(static_cast<std::size_t>(top + 1), 0)
{
    boundaries_.resize(static_cast<std::size_t>(top + 1));
}

ChainComplex::ChainComplex(std::vector<int> ranks, std::vector<SparseIntMatrix> boundaries)
    : top_(static_cast<int>(ranks.size()) - 1), ranks_(std::move(ranks)), boundaries_(std::move(boundaries))
{
    boundaries_.resize(ranks_.size());
    for (int d = 1; d <= top_; ++d) {
        const auto& b = boundaries_[d];
        if (b.rows() != ranks_[d - 1] || b.cols() != ranks_[d])
            throw std::logic_error("boundary shape mismatch in degree " + std::to_string(d));
    }
}

const SparseIntMatrix& ChainComplex::boundary(int d) const
{
    if (d <= 0 || d > top_)
        return empty_;
    return boundaries_[d];
}

bool ChainComplex::boundary_squares_to_zero() const
{
    for (int d = 2; d <= top_; ++d)
        if (!(boundaries_[d - 1] * boundaries_[d]).is_zero())
            return false;
    return true;
}

void ChainComplex::check() const
{
    for (int d = 2; d <= top_; ++d)
        if (!(boundaries_[d - 1] * boundaries_[d]).is_zero())
            throw std::logic_error("boundary does not square to zero in degree " + std::to_string(d));
}

long ChainComplex::euler_characteristic(int lo, int hi) const
{
    long chi = 0;
    for (int d = lo; d <= hi; ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(rank(d));
    return chi;
}

GradedAbelianGroup ChainComplex::homology(int lo, int hi) const
{
    if (lo < 0 || hi < lo)
        throw RangeError("empty or negative homology window");
    if (hi >= top_)
        throw RangeError("homology requested through degree " + std::to_string(hi) +
                         " but the complex is trusted only below degree " + std::to_string(top_));
    GradedAbelianGroup out(lo, hi);
    std::map<int, std::vector<BigInt>> factors;
    auto snf = [&](int d) -> const std::vector<BigInt>& {
        auto it = factors.find(d);
        if (it == factors.end())
            it = factors.emplace(d, d >= 1 ? smith_normal_form(boundaries_[d]) : std::vector<BigInt>{}).first;
        return it->second;
    };
    for (int d = lo; d <= hi; ++d) {
        const auto& out_f = snf(d);
        const auto& in_f = snf(d + 1);
        HomologyGroup g;
        g.betti = ranks_[d] - static_cast<int>(out_f.size()) - static_cast<int>(in_f.size());
        for (const auto& t : in_f)
            if (t > 1)
                g.torsion.push_back(t);
        out.at(d) = std::move(g);
    }
    return out;
}

ChainComplex ChainComplex::truncated(int top) const
{
    top = std::min(top, top_);
    std::vector<int> r(ranks_.begin(), ranks_.begin() + top + 1);
    std::vector<SparseIntMatrix> b(boundaries_.begin(), boundaries_.begin() + top + 1);
    return ChainComplex(std::move(r), std::move(b));
}

GradedAbelianGroup homology_range(const ChainComplex& c, int lo, int hi)
{
    return c.homology(lo, hi);
}

// -- maps, cones, tensor -------------------------------------------------------------

bool ChainMap::commutes() const
{
    int top = std::min({source->top(), target->top(), static_cast<int>(components.size()) - 1});
    for (int d = 0; d <= top; ++d) {
        const auto& f = components[d];
        if (f.rows() != target->rank(d) || f.cols() != source->rank(d))
            return false;
    }
    for (int d = 1; d <= top; ++d)
        if (!(target->boundary(d) * components[d] == components[d - 1] * source->boundary(d)))
            return false;
    return true;
}

ChainComplex mapping_cone(const ChainMap& f)
{
    if (!f.commutes())
        throw std::invalid_argument("mapping cone of a map that is not a chain map");
    const ChainComplex& c = *f.source;
    const ChainComplex& d = *f.target;
    int top = std::min({d.top(), c.top() + 1, static_cast<int>(f.components.size())});
    std::vector<int> ranks(top + 1);
    for (int n = 0; n <= top; ++n)
        ranks[n] = d.rank(n) + c.rank(n - 1);
    std::vector<SparseIntMatrix> bd(top + 1);
    for (int n = 1; n <= top; ++n) {
        SparseIntMatrix m(ranks[n - 1], ranks[n]);
        for (int j = 0; j < d.rank(n); ++j)
            m.set_column(j, d.boundary(n).column(j));
        for (int j = 0; j < c.rank(n - 1); ++j) {
            VectorBuilder b;
            b.add(f.components[n - 1].column(j), 1);
            if (n >= 2)
                for (const auto& [r, v] : c.boundary(n - 1).column(j))
                    b.add(d.rank(n - 1) + r, -v);
            m.set_column(d.rank(n) + j, b.take());
        }
        bd[n] = std::move(m);
    }
    return ChainComplex(std::move(ranks), std::move(bd));
}

std::string GradedComparison::to_string() const
{
    if (equal)
        return "equal";
    return "mismatch at degree " + std::to_string(*degree) + ": " + left.to_string() + " vs " + right.to_string();
}

GradedComparison compare_graded(const GradedAbelianGroup& a, const GradedAbelianGroup& b, int lo, int hi)
{
    if (!a.covers(lo, hi) || !b.covers(lo, hi))
        throw RangeError("comparison window not covered by both groups");
    GradedComparison out;
    for (int d = lo; d <= hi; ++d) {
        if (!(a.at(d) == b.at(d))) {
            out.equal = false;
            out.degree = d;
            out.left = a.at(d);
            out.right = b.at(d);
            return out;
        }
    }
    return out;
}

ChainComplex tensor(const ChainComplex& c, const ChainComplex& d, int top)
{
    top = std::min({top, c.top(), d.top()});
    if (top < 0)
        return ChainComplex(std::vector<int>{}, {});
    // offset[n][p] = start of block C_p ⊗ D_{n-p}
    std::vector<std::vector<int>> offset(top + 1);
    std::vector<int> ranks(top + 1, 0);
    for (int n = 0; n <= top; ++n) {
        for (int p = 0; p <= n; ++p) {
            offset[n].push_back(ranks[n]);
            ranks[n] += c.rank(p) * d.rank(n - p);
        }
    }
    std::vector<SparseIntMatrix> bd(top + 1);
    for (int n = 1; n <= top; ++n) {
        SparseIntMatrix m(ranks[n - 1], ranks[n]);
        for (int p = 0; p <= n; ++p) {
            const int q = n - p;
            for (int i = 0; i < c.rank(p); ++i) {
                for (int j = 0; j < d.rank(q); ++j) {
                    VectorBuilder b;
                    if (p >= 1)
                        for (const auto& [k, v] : c.boundary(p).column(i))
                            b.add(offset[n - 1][p - 1] + k * d.rank(q) + j, v);
                    if (q >= 1)
                        for (const auto& [l, v] : d.boundary(q).column(j))
                            b.add(offset[n - 1][p] + i * d.rank(q - 1) + l, parity_sign(p) * v);
                    m.set_column(offset[n][p] + i * d.rank(q) + j, b.take());
                }
            }
        }
        bd[n] = std::move(m);
    }
    return ChainComplex(std::move(ranks), std::move(bd));
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b)
{
    int top = std::min(a.top(), b.top());
    std::vector<int> ranks(top + 1);
    for (int n = 0; n <= top; ++n)
        ranks[n] = a.rank(n) + b.rank(n);
    std::vector<SparseIntMatrix> bd(top + 1);
    for (int n = 1; n <= top; ++n) {
        SparseIntMatrix m(ranks[n - 1], ranks[n]);
        for (int j = 0; j < a.rank(n); ++j)
            m.set_column(j, a.boundary(n).column(j));
        for (int j = 0; j < b.rank(n); ++j) {
            SparseVector v = b.boundary(n).column(j);
            for (auto& e : v)
                e.first += a.rank(n - 1);
            m.set_column(a.rank(n) + j, std::move(v));
        }
        bd[n] = std::move(m);
    }
    return ChainComplex(std::move(ranks), std::move(bd));
}

ChainComplex unit_complex(int top)
{
    std::vector<int> ranks(top + 1, 0);
    ranks[0] = 1;
    std::vector<SparseIntMatrix> bd(top + 1);
    for (int n = 1; n <= top; ++n)
        bd[n] = SparseIntMatrix(ranks[n - 1], ranks[n]);
    return ChainComplex(std::move(ranks), std::move(bd));
}

}  // namespace gcalc
