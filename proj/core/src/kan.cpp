#include "gcalc/kan.hpp"

#include <map>
#include <random>

namespace gcalc {

GroupWord::GroupWord(std::vector<Letter> letters)
{
    for (Letter& l : letters) {
        if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp)
            letters_.pop_back();
        else
            letters_.push_back(std::move(l));
    }
}

GroupWord GroupWord::operator*(const GroupWord& rhs) const
{
    std::vector<Letter> all = letters_;
    all.insert(all.end(), rhs.letters_.begin(), rhs.letters_.end());
    return GroupWord(std::move(all));
}

GroupWord GroupWord::inverse() const
{
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (Letter& l : out)
        l.exp = -l.exp;
    return GroupWord(std::move(out));
}

SymbolicSimplicialGroup::SymbolicSimplicialGroup(SSetPtr reduced) : base_(std::move(reduced))
{
    if (base_->count(0) != 1)
        throw KanError("Kan loop group needs a reduced simplicial set");
}

GroupWord SymbolicSimplicialGroup::tau(const Simplex& x) const
{
    return is_generator(x) ? GroupWord::generator(x) : GroupWord{};
}

std::vector<Simplex> SymbolicSimplicialGroup::generators(int n) const
{
    std::vector<Simplex> out;
    const int target = n + 1;
    for (int m = 0; m <= std::min(target, base_->dimension()); ++m) {
        const int k = target - m;
        // decreasing words i₁ > ... > i_k with i_k <= m, i_{k-1} <= m + 1, ..., none equal to 0
        std::vector<int> word(k);
        std::function<void(int)> fill = [&](int pos) {
            if (pos < 0) {
                for (int g = 0; g < base_->count(m); ++g)
                    out.push_back(Simplex{m, g, DegeneracyWord(word)});
                return;
            }
            const int cap = m + (k - 1 - pos);
            const int floor = pos + 1 < k ? word[pos + 1] + 1 : 1;
            for (int v = floor; v <= cap; ++v) {
                word[pos] = v;
                fill(pos - 1);
            }
        };
        fill(k - 1);
    }
    return out;
}

GroupWord SymbolicSimplicialGroup::standard_face(const Simplex& x, int i) const
{
    if (i == 0)
        return tau(base_->face(x, 1)) * tau(base_->face(x, 0)).inverse();
    return tau(base_->face(x, i + 1));
}

GroupWord SymbolicSimplicialGroup::face(const GroupWord& w, int i) const
{
    GroupWord out;
    for (const auto& l : w.letters()) {
        if (i < 0 || i > l.gen.dim() - 1 || l.gen.dim() < 2)
            throw KanError("face index out of range");
        GroupWord f = face_rule_ ? face_rule_(*this, l.gen, i) : standard_face(l.gen, i);
        out = out * (l.exp > 0 ? f : f.inverse());
    }
    return out;
}

GroupWord SymbolicSimplicialGroup::degeneracy(const GroupWord& w, int j) const
{
    GroupWord out;
    for (const auto& l : w.letters()) {
        if (j < 0 || j > l.gen.dim() - 1)
            throw KanError("degeneracy index out of range");
        GroupWord s = tau(base_->degeneracy(l.gen, j + 1));
        out = out * (l.exp > 0 ? s : s.inverse());
    }
    return out;
}

SymbolicSimplicialGroup SymbolicSimplicialGroup::with_face_rule(FaceRule rule) const
{
    SymbolicSimplicialGroup g = *this;
    g.face_rule_ = std::move(rule);
    return g;
}

std::string SymbolicSimplicialGroup::to_string(const GroupWord& w) const
{
    if (w.is_identity())
        return "1";
    std::string out;
    for (const auto& l : w.letters()) {
        if (!out.empty())
            out += " ";
        out += "τ(" + base_->to_string(l.gen) + ")" + (l.exp < 0 ? "⁻¹" : "");
    }
    return out;
}

SymbolicSimplicialGroup kan_loop_group(const SSetPtr& y, Basepoint base)
{
    if (components(*y).size() != 1)
        throw KanError("Kan loop group needs a connected simplicial set");
    SMap q = reduce_at(y, base);
    return SymbolicSimplicialGroup(q.target());
}

IdentityVerdict check_identities(const SymbolicSimplicialGroup& g, int samples, int max_len, std::uint64_t seed)
{
    IdentityVerdict v;
    std::mt19937_64 rng(seed);
    const int max_degree = std::min(g.base().dimension() + 1, 5);
    std::vector<std::vector<Simplex>> gens(max_degree + 2);
    for (int n = 0; n <= max_degree + 1; ++n)
        gens[n] = g.generators(n);

    auto random_word = [&](int n) {
        std::vector<GroupWord::Letter> letters;
        if (gens[n].empty())
            return GroupWord{};
        std::uniform_int_distribution<int> len(1, std::max(1, max_len));
        std::uniform_int_distribution<std::size_t> pick(0, gens[n].size() - 1);
        std::bernoulli_distribution sign(0.5);
        for (int k = len(rng); k > 0; --k)
            letters.push_back({gens[n][pick(rng)], sign(rng) ? 1 : -1});
        return GroupWord(std::move(letters));
    };
    auto fail = [&](int n, const std::string& identity, const GroupWord& w) {
        v.passed = false;
        v.identity = identity;
        v.counterexample = g.to_string(w);
        v.degree = n;
    };
    auto check = [&](bool ok, int n, const std::string& identity, const GroupWord& w) {
        ++v.checks;
        if (!ok && v.passed)
            fail(n, identity, w);
        return ok;
    };
    const std::string d = "d", s = "s";
    auto name = [](const std::string& op, int i) { return op + std::to_string(i); };

    std::uniform_int_distribution<int> degree(0, max_degree);
    for (int t = 0; t < samples && v.passed; ++t) {
        const int n = degree(rng);
        GroupWord a = random_word(n), b = random_word(n);
        for (int i = 0; n >= 1 && i <= n; ++i)
            check(g.face(a * b, i) == g.face(a, i) * g.face(b, i), n, name(d, i) + " is a homomorphism", a * b);
        for (int j = 0; j <= n; ++j)
            check(g.degeneracy(a * b, j) == g.degeneracy(a, j) * g.degeneracy(b, j), n,
                  name(s, j) + " is a homomorphism", a * b);
        for (int j = 1; n >= 2 && j <= n; ++j)
            for (int i = 0; i < j; ++i)
                check(g.face(g.face(a, j), i) == g.face(g.face(a, i), j - 1), n,
                      name(d, i) + " " + name(d, j) + " = " + name(d, j - 1) + " " + name(d, i), a);
        for (int j = 0; j <= n; ++j) {
            GroupWord sa = g.degeneracy(a, j);
            for (int i = 0; i <= n + 1; ++i) {
                GroupWord lhs = g.face(sa, i);
                std::string id = name(d, i) + " " + name(s, j);
                if (i < j) {
                    if (n >= 1)
                        check(lhs == g.degeneracy(g.face(a, i), j - 1), n, id + " = " + name(s, j - 1) + " " + name(d, i), a);
                }
                else if (i == j || i == j + 1) {
                    check(lhs == a, n, id + " = id", a);
                }
                else if (n >= 1) {
                    check(lhs == g.degeneracy(g.face(a, i - 1), j), n, id + " = " + name(s, j) + " " + name(d, i - 1), a);
                }
            }
            for (int i = 0; i <= j; ++i)
                check(g.degeneracy(sa, i) == g.degeneracy(g.degeneracy(a, i), j + 1), n,
                      name(s, i) + " " + name(s, j) + " = " + name(s, j + 1) + " " + name(s, i), a);
        }
    }
    return v;
}

HomologyGroup h1_via_pi0(const SymbolicSimplicialGroup& g)
{
    std::vector<Simplex> g0 = g.generators(0);
    std::vector<Simplex> g1 = g.generators(1);
    std::map<Simplex, int> row;
    for (std::size_t i = 0; i < g0.size(); ++i)
        row.emplace(g0[i], static_cast<int>(i));
    SparseIntMatrix rel(static_cast<int>(g0.size()), static_cast<int>(g1.size()));
    for (std::size_t c = 0; c < g1.size(); ++c) {
        GroupWord w = GroupWord::generator(g1[c]);
        VectorBuilder col;
        const GroupWord d0 = g.face(w, 0), d1 = g.face(w, 1);
        for (const auto& l : d0.letters())
            col.add(row.at(l.gen), l.exp);
        for (const auto& l : d1.letters())
            col.add(row.at(l.gen), -l.exp);
        rel.set_column(static_cast<int>(c), col.take());
    }
    HomologyGroup h;
    std::vector<BigInt> factors = smith_normal_form(rel);
    h.betti = static_cast<int>(g0.size() - factors.size());
    for (const BigInt& f : factors)
        if (f > 1)
            h.torsion.push_back(f);
    return h;
}

}  // namespace gcalc
