#include "gcalc/dga.hpp"

#include <algorithm>
#include <map>

namespace gcalc {

namespace {

using Key = std::vector<int>;

/// Per-degree list of keys with reverse lookup.
class KeyedBasis {
public:
    explicit KeyedBasis(int top) : keys_(top + 1), index_(top + 1) {}

    int top() const { return static_cast<int>(keys_.size()) - 1; }
    int rank(int d) const { return (d < 0 || d > top()) ? 0 : static_cast<int>(keys_[d].size()); }
    const Key& key(int d, int i) const { return keys_[d][i]; }

    int add(int d, Key k)
    {
        auto [it, fresh] = index_[d].emplace(k, rank(d));
        if (fresh)
            keys_[d].push_back(std::move(k));
        return it->second;
    }

    int find(int d, const Key& k) const
    {
        if (d < 0 || d > top())
            return -1;
        auto it = index_[d].find(k);
        return it == index_[d].end() ? -1 : it->second;
    }

private:
    std::vector<std::vector<Key>> keys_;
    std::vector<std::map<Key, int>> index_;
};

/// Words in letters of positive degree, enumerated by total degree up to top.
class WordBasis {
public:
    WordBasis(std::vector<int> letter_deg, int top) : deg_(std::move(letter_deg)), basis_(top)
    {
        basis_.add(0, {});
        for (int d = 1; d <= top; ++d)
            for (int l = 0; l < static_cast<int>(deg_.size()); ++l)
                if (deg_[l] <= d)
                    for (int i = 0; i < basis_.rank(d - deg_[l]); ++i) {
                        Key w{l};
                        const Key& rest = basis_.key(d - deg_[l], i);
                        w.insert(w.end(), rest.begin(), rest.end());
                        basis_.add(d, std::move(w));
                    }
    }

    int top() const { return basis_.top(); }
    int rank(int d) const { return basis_.rank(d); }
    const Key& word(int d, int i) const { return basis_.key(d, i); }
    int find(int d, const Key& w) const { return basis_.find(d, w); }
    int letter_degree(int l) const { return deg_[l]; }

private:
    std::vector<int> deg_;
    KeyedBasis basis_;
};

/// One term of a letter's differential: coefficient times a word of zero, one or two letters.
struct LetterTerm {
    Coeff coeff;
    Key word;
};

/// Letters s⁻¹σ of a 1-reduced set and their cobar differentials.
struct CobarLetters {
    std::vector<Simplex> simplex;
    std::vector<int> degree;
    std::map<std::pair<int, int>, int> of;  // (dim, gen) -> letter
    std::vector<std::vector<LetterTerm>> diff;

    int letter(const Simplex& s) const
    {
        if (!s.nondegenerate())
            return -1;
        auto it = of.find({s.gen_dim, s.gen});
        return it == of.end() ? -1 : it->second;
    }
};

void require_one_reduced(const SimplicialSet& x, const char* what)
{
    if (x.count(0) != 1) {
        std::string name = x.count(0) == 0 ? std::string("<none>") : x.name(0, 1);
        throw NotReducedError(std::string(what) + " needs a 1-reduced simplicial set; extra vertex " + name, name);
    }
    if (x.count(1) != 0)
        throw NotReducedError(std::string(what) + " needs a 1-reduced simplicial set; nondegenerate edge " +
                                  x.name(1, 0),
                              x.name(1, 0));
}

CobarLetters cobar_letters(const SimplicialSet& x, int top)
{
    CobarLetters out;
    for (int d = 2; d <= std::min(x.dimension(), top + 1); ++d)
        for (int g = 0; g < x.count(d); ++g) {
            out.of.emplace(std::make_pair(d, g), static_cast<int>(out.simplex.size()));
            out.simplex.push_back(SimplicialSet::generator(d, g));
            out.degree.push_back(d - 1);
        }
    for (const Simplex& s : out.simplex) {
        const int n = s.dim();
        std::vector<LetterTerm> terms;
        for (int i = 0; i <= n; ++i) {
            int l = out.letter(x.face(s, i));
            if (l >= 0)
                terms.push_back({-parity_sign(i), {l}});
        }
        for (int i = 1; i < n; ++i) {
            int f = out.letter(x.front(s, i));
            int b = out.letter(x.back(s, i));
            if (f >= 0 && b >= 0)
                terms.push_back({parity_sign(i), {f, b}});
        }
        out.diff.push_back(std::move(terms));
    }
    return out;
}

/// Derivation extension of the letter differential to a word; calls emit(word, coeff).
template <typename Emit>
void word_differential(const CobarLetters& letters, const Key& w, Emit&& emit)
{
    int before = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        const int sign = parity_sign(before);
        for (const LetterTerm& t : letters.diff[w[j]]) {
            Key out(w.begin(), w.begin() + static_cast<long>(j));
            out.insert(out.end(), t.word.begin(), t.word.end());
            out.insert(out.end(), w.begin() + static_cast<long>(j) + 1, w.end());
            emit(out, sign * t.coeff);
        }
        before += letters.degree[w[j]];
    }
}

SparseVector vec_times(const DgAlgebra& a, int p, const SparseVector& x, BasisRef b)
{
    VectorBuilder out;
    for (const auto& [i, c] : x)
        out.add(a.multiply({p, i}, b), c);
    return out.take();
}

SparseVector times_vec(const DgAlgebra& a, BasisRef x, int q, const SparseVector& y)
{
    VectorBuilder out;
    for (const auto& [j, c] : y)
        out.add(a.multiply(x, {q, j}), c);
    return out.take();
}

std::string describe(const char* what, const std::string& x, const std::string& y)
{
    return std::string(what) + " fails on " + x + ", " + y;
}

}  // namespace

// -- DgAlgebra ------------------------------------------------------------------------

DgAlgebra::DgAlgebra(std::string label, ChainComplex chains, Product mul, std::vector<std::vector<std::string>> names)
    : label_(std::move(label)), chains_(std::move(chains)), mul_(std::move(mul)), names_(std::move(names))
{
    if (chains_.rank(0) != 1)
        throw DgaError("algebra " + label_ + " is not connected");
}

SparseVector DgAlgebra::multiply(BasisRef a, BasisRef b) const
{
    if (a.deg + b.deg > top())
        return {};
    if (a.deg == 0)
        return b.deg == 0 ? SparseVector{{0, 1}} : SparseVector{{b.idx, 1}};
    if (b.deg == 0)
        return {{a.idx, 1}};
    return mul_(a, b);
}

std::vector<BasisRef> DgAlgebra::decompose(BasisRef a) const
{
    if (!decompose_)
        return {a};
    return decompose_(a);
}

std::string DgAlgebra::basis_name(BasisRef a) const
{
    if (a.deg < static_cast<int>(names_.size()) && a.idx < static_cast<int>(names_[a.deg].size()))
        return names_[a.deg][a.idx];
    if (!factors_.empty()) {
        auto parts = decompose(a);
        std::string out;
        for (std::size_t k = 0; k < parts.size(); ++k)
            out += (k ? " ⊗ " : "") + factors_[k]->basis_name(parts[k]);
        return out;
    }
    return "e" + std::to_string(a.deg) + "_" + std::to_string(a.idx);
}

std::optional<std::string> DgAlgebra::verify(std::optional<int> max_degree) const
{
    const int top_d = std::min(max_degree.value_or(top()), top());
    auto bd = [&](BasisRef x) -> SparseVector { return x.deg == 0 ? SparseVector{} : chains_.boundary(x.deg).column(x.idx); };
    for (int p = 0; p <= top_d; ++p)
        for (int i = 0; i < rank(p); ++i) {
            BasisRef a{p, i};
            SparseVector self{{i, 1}};
            if (multiply({0, 0}, a) != self || multiply(a, {0, 0}) != self)
                return "unit law fails on " + basis_name(a);
            for (int q = 0; p + q <= top_d; ++q)
                for (int j = 0; j < rank(q); ++j) {
                    BasisRef b{q, j};
                    SparseVector ab = multiply(a, b);
                    for (const auto& [k, c] : ab)
                        if (k < 0 || k >= rank(p + q) || c == 0)
                            return describe("product range", basis_name(a), basis_name(b));
                    if (p + q >= 1) {
                        SparseVector lhs;
                        {
                            VectorBuilder v;
                            for (const auto& [k, c] : ab)
                                v.add(chains_.boundary(p + q).column(k), c);
                            lhs = v.take();
                        }
                        VectorBuilder rhs;
                        if (p >= 1)
                            rhs.add(vec_times(*this, p - 1, bd(a), b), 1);
                        if (q >= 1)
                            rhs.add(times_vec(*this, a, q - 1, bd(b)), parity_sign(p));
                        if (lhs != rhs.take())
                            return describe("Leibniz rule", basis_name(a), basis_name(b));
                    }
                    for (int r = 0; p + q + r <= top_d; ++r)
                        for (int k = 0; k < rank(r); ++k) {
                            BasisRef c{r, k};
                            if (vec_times(*this, p + q, ab, c) != times_vec(*this, a, q + r, multiply(b, c)))
                                return describe("associativity", basis_name(a), basis_name(b) + ", " + basis_name(c));
                        }
                }
        }
    return std::nullopt;
}

AlgebraPtr trivial_algebra(int top)
{
    return std::make_shared<const DgAlgebra>(
        "Z", unit_complex(top), [](BasisRef, BasisRef) { return SparseVector{}; },
        std::vector<std::vector<std::string>>{{"1"}});
}

AlgebraPtr cobar(const SimplicialSet& x, int top)
{
    require_one_reduced(x, "cobar");
    auto letters = std::make_shared<const CobarLetters>(cobar_letters(x, top));
    auto words = std::make_shared<const WordBasis>(letters->degree, top);

    std::vector<int> ranks(top + 1);
    std::vector<SparseIntMatrix> bd(top + 1);
    std::vector<std::vector<std::string>> names(top + 1);
    for (int d = 0; d <= top; ++d) {
        ranks[d] = words->rank(d);
        for (int i = 0; i < words->rank(d); ++i) {
            const Key& w = words->word(d, i);
            std::string n = w.empty() ? "1" : "[";
            for (std::size_t k = 0; k < w.size(); ++k)
                n += (k ? "|" : "") + x.to_string(letters->simplex[w[k]]);
            names[d].push_back(w.empty() ? n : n + "]");
        }
    }
    for (int d = 1; d <= top; ++d) {
        SparseIntMatrix m(ranks[d - 1], ranks[d]);
        for (int i = 0; i < ranks[d]; ++i) {
            VectorBuilder col;
            word_differential(*letters, words->word(d, i), [&](const Key& w, Coeff c) {
                col.add(words->find(d - 1, w), c);
            });
            m.set_column(i, col.take());
        }
        bd[d] = std::move(m);
    }
    ChainComplex chains(std::move(ranks), std::move(bd));
    auto mul = [words](BasisRef a, BasisRef b) -> SparseVector {
        Key w = words->word(a.deg, a.idx);
        const Key& v = words->word(b.deg, b.idx);
        w.insert(w.end(), v.begin(), v.end());
        return {{words->find(a.deg + b.deg, w), 1}};
    };
    return std::make_shared<const DgAlgebra>("cobar", std::move(chains), mul, std::move(names));
}

AlgebraPtr tensor_product(const std::vector<AlgebraPtr>& factors)
{
    if (factors.empty())
        throw DgaError("tensor product of no algebras");
    const int k = static_cast<int>(factors.size());
    int top = factors[0]->top();
    for (const auto& f : factors)
        top = std::min(top, f->top());

    // key: (deg_1, idx_1, ..., deg_k, idx_k), lexicographic in that order
    auto basis = std::make_shared<KeyedBasis>(top);
    std::function<void(int, int, Key&)> fill = [&](int pos, int remaining, Key& key) {
        if (pos == k - 1) {
            for (int i = 0; i < factors[pos]->rank(remaining); ++i) {
                key.push_back(remaining);
                key.push_back(i);
                int total = 0;
                for (int m = 0; m < k; ++m)
                    total += key[2 * m];
                basis->add(total, key);
                key.resize(key.size() - 2);
            }
            return;
        }
        for (int d = 0; d <= remaining; ++d)
            for (int i = 0; i < factors[pos]->rank(d); ++i) {
                key.push_back(d);
                key.push_back(i);
                fill(pos + 1, remaining - d, key);
                key.resize(key.size() - 2);
            }
    };
    for (int n = 0; n <= top; ++n) {
        Key key;
        fill(0, n, key);
    }

    std::vector<int> ranks(top + 1);
    for (int n = 0; n <= top; ++n)
        ranks[n] = basis->rank(n);
    std::vector<SparseIntMatrix> bd(top + 1);
    for (int n = 1; n <= top; ++n) {
        SparseIntMatrix m(ranks[n - 1], ranks[n]);
        for (int i = 0; i < ranks[n]; ++i) {
            const Key& key = basis->key(n, i);
            VectorBuilder col;
            int before = 0;
            for (int pos = 0; pos < k; ++pos) {
                const int d = key[2 * pos];
                if (d >= 1)
                    for (const auto& [j, c] : factors[pos]->chains().boundary(d).column(key[2 * pos + 1])) {
                        Key out = key;
                        out[2 * pos] = d - 1;
                        out[2 * pos + 1] = j;
                        col.add(basis->find(n - 1, out), parity_sign(before) * c);
                    }
                before += d;
            }
            m.set_column(i, col.take());
        }
        bd[n] = std::move(m);
    }

    auto mul = [factors, basis, k](BasisRef a, BasisRef b) -> SparseVector {
        const Key& x = basis->key(a.deg, a.idx);
        const Key& y = basis->key(b.deg, b.idx);
        // x₁..x_k y₁..y_k -> (x₁y₁)..(x_k y_k): y_l passes x_m for l < m
        int sign = 1;
        for (int l = 0; l < k; ++l)
            for (int m = l + 1; m < k; ++m)
                sign *= koszul_sign(y[2 * l], x[2 * m]);
        std::vector<std::pair<Key, Coeff>> partial{{{}, sign}};
        for (int l = 0; l < k; ++l) {
            SparseVector prod = factors[l]->multiply({x[2 * l], x[2 * l + 1]}, {y[2 * l], y[2 * l + 1]});
            std::vector<std::pair<Key, Coeff>> next;
            for (const auto& [pk, pc] : partial)
                for (const auto& [j, c] : prod) {
                    Key nk = pk;
                    nk.push_back(x[2 * l] + y[2 * l]);
                    nk.push_back(j);
                    next.emplace_back(std::move(nk), pc * c);
                }
            partial = std::move(next);
        }
        VectorBuilder out;
        for (const auto& [key, c] : partial)
            out.add(basis->find(a.deg + b.deg, key), c);
        return out.take();
    };

    std::string label;
    for (int l = 0; l < k; ++l)
        label += (l ? " ⊗ " : "") + factors[l]->label();
    auto alg = std::make_shared<DgAlgebra>(label, ChainComplex(std::move(ranks), std::move(bd)), mul);
    alg->factors_ = factors;
    alg->decompose_ = [basis, k](BasisRef a) {
        const Key& key = basis->key(a.deg, a.idx);
        std::vector<BasisRef> out;
        for (int l = 0; l < k; ++l)
            out.push_back({key[2 * l], key[2 * l + 1]});
        return out;
    };
    return alg;
}

// -- DgModule ----------------------------------------------------------------------------

const AlgebraPtr DgModule::none_{};

DgModule::DgModule(std::string label, ChainComplex chains, std::optional<ModuleAction> left,
                   std::optional<ModuleAction> right)
    : label_(std::move(label)), chains_(std::move(chains)), left_(std::move(left)), right_(std::move(right))
{
    if ((left_ && !left_->algebra) || (right_ && !right_->algebra))
        throw DgaError("module action without an algebra");
}

DgModule DgModule::zero(AlgebraPtr left, AlgebraPtr right, int top)
{
    auto nothing = [](BasisRef, BasisRef) { return SparseVector{}; };
    std::optional<ModuleAction> l, r;
    if (left)
        l = ModuleAction{std::move(left), nothing};
    if (right)
        r = ModuleAction{std::move(right), nothing};
    return DgModule("0", ChainComplex(std::vector<int>(top + 1, 0), {}), std::move(l), std::move(r));
}

bool DgModule::is_zero() const
{
    for (int d = 0; d <= top(); ++d)
        if (chains_.rank(d) != 0)
            return false;
    return true;
}

const AlgebraPtr& DgModule::left_algebra() const { return left_ ? left_->algebra : none_; }
const AlgebraPtr& DgModule::right_algebra() const { return right_ ? right_->algebra : none_; }

SparseVector DgModule::act_left(BasisRef a, BasisRef m) const
{
    if (!left_)
        throw DgaError("module " + label_ + " has no left action");
    if (a.deg + m.deg > top())
        return {};
    return left_->act(a, m);
}

SparseVector DgModule::act_right(BasisRef m, BasisRef a) const
{
    if (!right_)
        throw DgaError("module " + label_ + " has no right action");
    if (a.deg + m.deg > top())
        return {};
    return right_->act(a, m);
}

std::optional<std::string> DgModule::verify(std::optional<int> max_degree) const
{
    const int top_d = std::min(max_degree.value_or(top()), top());
    auto bd_m = [&](int d, int i) -> SparseVector { return d == 0 ? SparseVector{} : chains_.boundary(d).column(i); };
    auto boundary_of = [&](int d, const SparseVector& v) {
        VectorBuilder out;
        if (d >= 1)
            for (const auto& [k, c] : v)
                out.add(chains_.boundary(d).column(k), c);
        return out.take();
    };
    auto check_side = [&](bool left) -> std::optional<std::string> {
        const DgAlgebra& alg = *(left ? left_ : right_)->algebra;
        auto act = [&](BasisRef a, BasisRef m) { return left ? act_left(a, m) : act_right(m, a); };
        auto act_vec_m = [&](BasisRef a, int md, const SparseVector& v) {
            VectorBuilder out;
            for (const auto& [k, c] : v)
                out.add(act(a, {md, k}), c);
            return out.take();
        };
        auto act_vec_a = [&](int ad, const SparseVector& v, BasisRef m) {
            VectorBuilder out;
            for (const auto& [k, c] : v)
                out.add(act({ad, k}, m), c);
            return out.take();
        };
        const char* side = left ? "left" : "right";
        for (int p = 0; p <= std::min(alg.top(), top_d); ++p)
            for (int i = 0; i < alg.rank(p); ++i)
                for (int q = 0; p + q <= top_d; ++q)
                    for (int j = 0; j < chains_.rank(q); ++j) {
                        BasisRef a{p, i}, m{q, j};
                        SparseVector am = act(a, m);
                        if (p == 0 && am != SparseVector{{j, 1}})
                            return std::string(side) + " unit fails on " + alg.basis_name(a);
                        if (p + q >= 1) {
                            // left: ∂(am) = (∂a)m + (-1)^|a| a∂m ; right: ∂(ma) = (∂m)a + (-1)^|m| m∂a
                            VectorBuilder rhs;
                            if (p >= 1)
                                rhs.add(act_vec_a(p - 1, alg.chains().boundary(p).column(i), m),
                                        left ? 1 : parity_sign(q));
                            if (q >= 1)
                                rhs.add(act_vec_m(a, q - 1, bd_m(q, j)), left ? parity_sign(p) : 1);
                            if (boundary_of(p + q, am) != rhs.take())
                                return std::string(side) + " Leibniz rule fails on " + alg.basis_name(a);
                        }
                        for (int r = 1; p + q + r <= top_d && r <= alg.top(); ++r)
                            for (int k = 0; k < alg.rank(r); ++k) {
                                BasisRef b{r, k};
                                // left: (b a) m = b (a m) ; right: m (a b) = (m a) b
                                SparseVector lhs = left ? act_vec_a(p + r, alg.multiply(b, a), m)
                                                        : act_vec_a(p + r, alg.multiply(a, b), m);
                                SparseVector rhs = act_vec_m(b, p + q, am);
                                if (lhs != rhs)
                                    return std::string(side) + " associativity fails on " + alg.basis_name(a) +
                                           ", " + alg.basis_name(b);
                            }
                    }
        return std::nullopt;
    };
    if (left_)
        if (auto why = check_side(true))
            return why;
    if (right_)
        if (auto why = check_side(false))
            return why;
    if (left_ && right_) {
        const DgAlgebra& la = *left_->algebra;
        const DgAlgebra& ra = *right_->algebra;
        for (int p = 1; p <= std::min(la.top(), top_d); ++p)
            for (int i = 0; i < la.rank(p); ++i)
                for (int q = 0; p + q <= top_d; ++q)
                    for (int j = 0; j < chains_.rank(q); ++j)
                        for (int r = 1; p + q + r <= top_d && r <= ra.top(); ++r)
                            for (int k = 0; k < ra.rank(r); ++k) {
                                VectorBuilder lhs, rhs;
                                for (const auto& [x, c] : act_left({p, i}, {q, j}))
                                    lhs.add(act_right({p + q, x}, {r, k}), c);
                                for (const auto& [x, c] : act_right({q, j}, {r, k}))
                                    rhs.add(act_left({p, i}, {q + r, x}), c);
                                if (lhs.take() != rhs.take())
                                    return "left and right actions do not commute on " + la.basis_name({p, i}) +
                                           ", " + ra.basis_name({r, k});
                            }
    }
    return std::nullopt;
}

DgModule regular_bimodule(const AlgebraPtr& a)
{
    const DgAlgebra* alg = a.get();
    return DgModule(a->label(), a->chains(),
                    ModuleAction{a, [alg](BasisRef x, BasisRef m) { return alg->multiply(x, m); }},
                    ModuleAction{a, [alg](BasisRef x, BasisRef m) { return alg->multiply(m, x); }});
}

DgModule trivial_module(const AlgebraPtr& left, const AlgebraPtr& right, const ChainComplex& c)
{
    auto through_augmentation = [](BasisRef a, BasisRef m) {
        return (a.deg == 0 && a.idx == 0) ? SparseVector{{m.idx, 1}} : SparseVector{};
    };
    std::optional<ModuleAction> l, r;
    if (left)
        l = ModuleAction{left, through_augmentation};
    if (right)
        r = ModuleAction{right, through_augmentation};
    return DgModule("trivial", c, std::move(l), std::move(r));
}

DgModule trivial_module(const AlgebraPtr& a, const ChainComplex& c, Side side)
{
    return side == Side::left ? trivial_module(a, nullptr, c) : trivial_module(nullptr, a, c);
}

DgModule coordinate_sum_module(const AlgebraPtr& tensor, const std::vector<std::pair<int, DgModule>>& summands,
                               const AlgebraPtr& right)
{
    if (summands.empty())
        return DgModule::zero(tensor, right, tensor->top());
    int top = tensor->top();
    for (const auto& [coord, m] : summands) {
        if (coord < 0 || coord >= tensor->factor_count())
            throw DgaError("coordinate out of range");
        const AlgebraPtr& expected = tensor->factors().empty() ? tensor : tensor->factors()[coord];
        if (m.left_algebra() != expected)
            throw DgaError("summand " + m.label() + " is not a module over coordinate " + std::to_string(coord));
        if (m.right_algebra() != right)
            throw DgaError("summand " + m.label() + " has a different right algebra");
        top = std::min(top, m.top());
    }
    ChainComplex chains = summands[0].second.chains().truncated(top);
    for (std::size_t s = 1; s < summands.size(); ++s)
        chains = direct_sum(chains, summands[s].second.chains());

    // offsets[s][d]: start of summand s in degree d
    auto offsets = std::make_shared<std::vector<std::vector<int>>>(summands.size(), std::vector<int>(top + 1, 0));
    for (int d = 0; d <= top; ++d) {
        int acc = 0;
        for (std::size_t s = 0; s < summands.size(); ++s) {
            (*offsets)[s][d] = acc;
            acc += summands[s].second.chains().rank(d);
        }
    }
    auto parts = std::make_shared<const std::vector<std::pair<int, DgModule>>>(summands);
    auto locate = [offsets, parts](BasisRef m) {
        std::size_t s = 0;
        while (s + 1 < parts->size() && (*offsets)[s + 1][m.deg] <= m.idx)
            ++s;
        return std::make_pair(s, BasisRef{m.deg, m.idx - (*offsets)[s][m.deg]});
    };
    auto shift = [offsets](std::size_t s, int d, SparseVector v) {
        for (auto& e : v)
            e.first += (*offsets)[s][d];
        return v;
    };
    const DgAlgebra* t = tensor.get();
    auto left = [t, parts, locate, shift](BasisRef a, BasisRef m) -> SparseVector {
        auto [s, local] = locate(m);
        const auto& [coord, mod] = (*parts)[s];
        auto coords = t->decompose(a);
        for (int l = 0; l < static_cast<int>(coords.size()); ++l)
            if (l != coord && coords[l] != BasisRef{0, 0})
                return {};
        return shift(s, a.deg + m.deg, mod.act_left(coords[coord], local));
    };
    auto rightact = [parts, locate, shift](BasisRef a, BasisRef m) -> SparseVector {
        auto [s, local] = locate(m);
        return shift(s, a.deg + m.deg, (*parts)[s].second.act_right(local, a));
    };
    std::string label;
    for (const auto& [coord, m] : summands)
        label += (label.empty() ? "" : " ⊕ ") + m.label() + "@" + std::to_string(coord);
    return DgModule(label, std::move(chains), ModuleAction{tensor, left}, ModuleAction{right, rightact});
}

DgModule coordinate_sum_module(const std::vector<AlgebraPtr>& algebras, const std::vector<DgModule>& modules)
{
    if (algebras.size() != modules.size() || algebras.empty())
        throw DgaError("coordinate sum needs one module per algebra");
    AlgebraPtr right = modules[0].right_algebra();
    AlgebraPtr tensor = algebras.size() == 1 ? algebras[0] : tensor_product(algebras);
    std::vector<std::pair<int, DgModule>> summands;
    for (std::size_t i = 0; i < modules.size(); ++i) {
        if (modules[i].left_algebra() != algebras[i])
            throw DgaError("module " + std::to_string(i) + " is not over algebra " + std::to_string(i));
        summands.emplace_back(static_cast<int>(i), modules[i]);
    }
    return coordinate_sum_module(tensor, summands, right);
}

DgModule direct_sum(const DgModule& a, const DgModule& b)
{
    if (a.left_algebra() != b.left_algebra() || a.right_algebra() != b.right_algebra())
        throw DgaError("direct sum of modules over different algebras");
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    ChainComplex chains = direct_sum(a.chains(), b.chains());
    auto first = std::make_shared<const DgModule>(a);
    auto second = std::make_shared<const DgModule>(b);
    auto dispatch = [first, second](bool left) {
        return [first, second, left](BasisRef x, BasisRef m) -> SparseVector {
            const int split = first->chains().rank(m.deg);
            const bool in_first = m.idx < split;
            const DgModule& mod = in_first ? *first : *second;
            BasisRef local{m.deg, in_first ? m.idx : m.idx - split};
            SparseVector v = left ? mod.act_left(x, local) : mod.act_right(local, x);
            if (!in_first)
                for (auto& e : v)
                    e.first += first->chains().rank(x.deg + m.deg);
            return v;
        };
    };
    std::optional<ModuleAction> l, r;
    if (a.has_left())
        l = ModuleAction{a.left_algebra(), dispatch(true)};
    if (a.has_right())
        r = ModuleAction{a.right_algebra(), dispatch(false)};
    return DgModule(a.label() + " ⊕ " + b.label(), std::move(chains), std::move(l), std::move(r));
}

// -- fiber and bar constructions -------------------------------------------------------------

ChainComplex em_fiber(const SMap& p, int top)
{
    const SimplicialSet& e = *p.source();
    const SimplicialSet& b = *p.target();
    require_one_reduced(b, "em_fiber");
    CobarLetters letters = cobar_letters(b, top);
    WordBasis words(letters.degree, top);

    // basis in degree n: (k, cell, word) with k = dim cell, ordered by k, cell, word
    std::vector<std::vector<int>> offset(top + 1, std::vector<int>(top + 1, 0));
    std::vector<int> ranks(top + 1, 0);
    for (int n = 0; n <= top; ++n)
        for (int k = 0; k <= n; ++k) {
            offset[n][k] = ranks[n];
            ranks[n] += e.count(k) * words.rank(n - k);
        }
    auto index = [&](int n, int k, int cell, const Key& w) {
        return offset[n][k] + cell * words.rank(n - k) + words.find(n - k, w);
    };

    std::vector<SparseIntMatrix> bd(top + 1);
    for (int n = 1; n <= top; ++n) {
        SparseIntMatrix m(ranks[n - 1], ranks[n]);
        for (int k = 0; k <= n; ++k) {
            const int wd = n - k;
            for (int cell = 0; cell < e.count(k); ++cell) {
                const Simplex s = SimplicialSet::generator(k, cell);
                for (int wi = 0; wi < words.rank(wd); ++wi) {
                    const Key& w = words.word(wd, wi);
                    VectorBuilder col;
                    if (k >= 1)
                        for (int i = 0; i <= k; ++i) {
                            Simplex f = e.face(s, i);
                            if (f.nondegenerate())
                                col.add(index(n - 1, k - 1, f.gen, w), parity_sign(i));
                        }
                    for (int i = 0; i + 2 <= k; ++i) {
                        Simplex front = e.front(s, i);
                        int l = letters.letter(p.apply(e.back(s, i)));
                        if (!front.nondegenerate() || l < 0)
                            continue;
                        Key lw{l};
                        lw.insert(lw.end(), w.begin(), w.end());
                        col.add(index(n - 1, i, front.gen, lw), parity_sign(i + 1));
                    }
                    word_differential(letters, w, [&](const Key& dw, Coeff c) {
                        col.add(index(n - 1, k, cell, dw), parity_sign(k) * c);
                    });
                    m.set_column(offset[n][k] + cell * words.rank(wd) + wi, col.take());
                }
            }
        }
        bd[n] = std::move(m);
    }
    return ChainComplex(std::move(ranks), std::move(bd));
}

namespace {

/// Basis of B(R, A, L): key (|r|, r, |a₁|, a₁, ..., |a_p|, a_p, |l|, l).
struct BarBasis {
    KeyedBasis basis;

    BarBasis(const DgModule& r, const DgAlgebra& a, const DgModule& l, int top) : basis(top)
    {
        // bar words by weight Σ(|a_i| + 1)
        KeyedBasis bars(top);
        bars.add(0, {});
        for (int w = 2; w <= top; ++w)
            for (int d = 1; d + 1 <= w; ++d)
                for (int i = 0; i < a.rank(d); ++i)
                    for (int j = 0; j < bars.rank(w - d - 1); ++j) {
                        Key k{d, i};
                        const Key& rest = bars.key(w - d - 1, j);
                        k.insert(k.end(), rest.begin(), rest.end());
                        bars.add(w, std::move(k));
                    }
        for (int n = 0; n <= top; ++n)
            for (int dr = 0; dr <= n; ++dr)
                for (int ri = 0; ri < r.chains().rank(dr); ++ri)
                    for (int w = 0; dr + w <= n; ++w)
                        for (int bi = 0; bi < bars.rank(w); ++bi) {
                            const int dl = n - dr - w;
                            for (int li = 0; li < l.chains().rank(dl); ++li) {
                                Key k{dr, ri};
                                const Key& bar = bars.key(w, bi);
                                k.insert(k.end(), bar.begin(), bar.end());
                                k.push_back(dl);
                                k.push_back(li);
                                basis.add(n, std::move(k));
                            }
                        }
    }
};

}  // namespace

ChainComplex two_sided_bar(const DgModule& r, const AlgebraPtr& a, const DgModule& l, int top)
{
    if (!r.has_right() || r.right_algebra() != a)
        throw DgaError("right module " + r.label() + " is not over " + a->label());
    if (!l.has_left() || l.left_algebra() != a)
        throw DgaError("left module " + l.label() + " is not over " + a->label());
    top = std::min({top, r.top(), l.top(), a->top() + 1});
    if (r.is_zero() || l.is_zero())
        return ChainComplex(std::vector<int>(top + 1, 0), {});

    BarBasis bb(r, *a, l, top);
    const KeyedBasis& basis = bb.basis;
    std::vector<int> ranks(top + 1);
    for (int n = 0; n <= top; ++n)
        ranks[n] = basis.rank(n);

    std::vector<SparseIntMatrix> bd(top + 1);
    for (int n = 1; n <= top; ++n) {
        SparseIntMatrix m(ranks[n - 1], ranks[n]);
        for (int col_i = 0; col_i < ranks[n]; ++col_i) {
            const Key& key = basis.key(n, col_i);
            const int p = static_cast<int>(key.size()) / 2 - 2;
            const BasisRef rr{key[0], key[1]};
            const BasisRef ll{key[key.size() - 2], key[key.size() - 1]};
            auto a_at = [&](int i) { return BasisRef{key[2 + 2 * i], key[3 + 2 * i]}; };
            // eps[i] = |r| + Σ_{j<i} (|a_j| + 1), i = 0..p
            std::vector<int> eps(p + 1, rr.deg);
            for (int i = 1; i <= p; ++i)
                eps[i] = eps[i - 1] + a_at(i - 1).deg + 1;

            VectorBuilder col;
            auto emit = [&](Key k, Coeff c) {
                int idx = basis.find(n - 1, k);
                if (idx < 0)
                    throw std::logic_error("bar differential left the basis");
                col.add(idx, c);
            };
            if (rr.deg >= 1)
                for (const auto& [j, c] : r.chains().boundary(rr.deg).column(rr.idx)) {
                    Key k = key;
                    k[0] = rr.deg - 1;
                    k[1] = j;
                    emit(std::move(k), c);
                }
            for (int i = 0; i < p; ++i) {
                BasisRef ai = a_at(i);
                if (ai.deg >= 2)
                    for (const auto& [j, c] : a->chains().boundary(ai.deg).column(ai.idx)) {
                        Key k = key;
                        k[2 + 2 * i] = ai.deg - 1;
                        k[3 + 2 * i] = j;
                        emit(std::move(k), -parity_sign(eps[i]) * c);
                    }
            }
            if (ll.deg >= 1)
                for (const auto& [j, c] : l.chains().boundary(ll.deg).column(ll.idx)) {
                    Key k = key;
                    k[k.size() - 2] = ll.deg - 1;
                    k[k.size() - 1] = j;
                    emit(std::move(k), parity_sign(eps[p]) * c);
                }
            if (p >= 1) {
                for (const auto& [j, c] : r.act_right(rr, a_at(0))) {
                    Key k{rr.deg + a_at(0).deg, j};
                    k.insert(k.end(), key.begin() + 4, key.end());
                    emit(std::move(k), parity_sign(rr.deg) * c);
                }
                for (int i = 0; i + 1 < p; ++i) {
                    BasisRef x = a_at(i), y = a_at(i + 1);
                    for (const auto& [j, c] : a->multiply(x, y)) {
                        Key k(key.begin(), key.begin() + 2 + 2 * i);
                        k.push_back(x.deg + y.deg);
                        k.push_back(j);
                        k.insert(k.end(), key.begin() + 6 + 2 * i, key.end());
                        emit(std::move(k), parity_sign(eps[i + 1]) * c);
                    }
                }
                BasisRef last = a_at(p - 1);
                for (const auto& [j, c] : l.act_left(last, ll)) {
                    Key k(key.begin(), key.end() - 4);
                    k.push_back(last.deg + ll.deg);
                    k.push_back(j);
                    emit(std::move(k), -parity_sign(eps[p - 1]) * c);
                }
            }
            m.set_column(col_i, col.take());
        }
        bd[n] = std::move(m);
    }
    return ChainComplex(std::move(ranks), std::move(bd));
}

DgModule bar_bimodule(const DgModule& r, const AlgebraPtr& a, const DgModule& l, int top)
{
    top = std::min({top, r.top(), l.top(), a->top() + 1});
    if (r.is_zero() || l.is_zero())
        return DgModule::zero(r.left_algebra(), l.right_algebra(), top);
    ChainComplex chains = two_sided_bar(r, a, l, top);
    auto basis = std::make_shared<const BarBasis>(r, *a, l, top);
    auto rm = std::make_shared<const DgModule>(r);
    auto lm = std::make_shared<const DgModule>(l);
    std::optional<ModuleAction> left, right;
    if (r.has_left())
        left = ModuleAction{r.left_algebra(), [basis, rm](BasisRef x, BasisRef m) {
                                const Key& key = basis->basis.key(m.deg, m.idx);
                                VectorBuilder out;
                                for (const auto& [j, c] : rm->act_left(x, {key[0], key[1]})) {
                                    Key k = key;
                                    k[0] += x.deg;
                                    k[1] = j;
                                    out.add(basis->basis.find(m.deg + x.deg, k), c);
                                }
                                return out.take();
                            }};
    if (l.has_right())
        right = ModuleAction{l.right_algebra(), [basis, lm](BasisRef x, BasisRef m) {
                                 const Key& key = basis->basis.key(m.deg, m.idx);
                                 const std::size_t s = key.size();
                                 VectorBuilder out;
                                 for (const auto& [j, c] : lm->act_right({key[s - 2], key[s - 1]}, x)) {
                                     Key k = key;
                                     k[s - 2] += x.deg;
                                     k[s - 1] = j;
                                     out.add(basis->basis.find(m.deg + x.deg, k), c);
                                 }
                                 return out.take();
                             }};
    return DgModule("B(" + r.label() + ", " + a->label() + ", " + l.label() + ")", std::move(chains),
                    std::move(left), std::move(right));
}

}  // namespace gcalc
