#include <gtest/gtest.h>

#include <random>

#include "gcalc/kan.hpp"
#include "gcalc/sset.hpp"
#include "cli.hpp"
#include "support.hpp"

using namespace gcalc;
using namespace gcalc::test;

namespace {

SSetPtr s(int n) { return sphere_model(n).space; }

SymbolicSimplicialGroup group_of(const SSetPtr& x) { return kan_loop_group(x, Basepoint{0}); }

HomologyGroup h1(const SimplicialSet& x) { return homology(x, 1, 1).at(1); }

// ∂₀ without the inverse on the second letter.
SymbolicSimplicialGroup perturbed(const SymbolicSimplicialGroup& g)
{
    return g.with_face_rule([](const SymbolicSimplicialGroup& h, const Simplex& x, int i) {
        if (i == 0)
            return h.tau(h.base().face(x, 1)) * h.tau(h.base().face(x, 0));
        return h.standard_face(x, i);
    });
}

GroupWord random_word(std::mt19937_64& rng, const std::vector<Simplex>& gens, int len)
{
    std::vector<GroupWord::Letter> letters;
    for (int i = 0; i < len; ++i) {
        letters.push_back({gens[rng() % gens.size()], (rng() & 1) ? 1 : -1});
    }
    return GroupWord(letters);
}

}  // namespace

TEST(GroupWord, FreeReduction)
{
    Simplex a{1, 0, {}}, b{1, 1, {}};
    GroupWord w({{a, 1}, {b, 1}, {b, -1}, {a, -1}});
    EXPECT_TRUE(w.is_identity());
    GroupWord u({{a, 1}, {b, -1}, {b, 1}, {b, 1}});
    EXPECT_EQ(u.length(), 2u);
    EXPECT_EQ(u, GroupWord::generator(a) * GroupWord::generator(b));
}

TEST(GroupWord, InverseAndAssociativity)
{
    std::mt19937_64 rng(11);
    std::vector<Simplex> gens{{1, 0, {}}, {1, 1, {}}, {1, 2, {}}};
    for (int trial = 0; trial < 200; ++trial) {
        auto x = random_word(rng, gens, 5);
        auto y = random_word(rng, gens, 5);
        auto z = random_word(rng, gens, 5);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_TRUE((x * x.inverse()).is_identity());
        EXPECT_EQ((x * y).inverse(), y.inverse() * x.inverse());
    }
}

TEST(GroupWord, ReductionIsConfluent)
{
    // Reducing the whole letter list at once matches reducing it in arbitrary pieces.
    std::mt19937_64 rng(5);
    std::vector<Simplex> gens{{1, 0, {}}, {1, 1, {}}};
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<GroupWord::Letter> letters;
        for (int i = 0; i < 12; ++i)
            letters.push_back({gens[rng() % 2], (rng() & 1) ? 1 : -1});
        GroupWord whole(letters);
        GroupWord pieces;
        std::size_t at = 0;
        while (at < letters.size()) {
            std::size_t n = 1 + rng() % 4;
            std::vector<GroupWord::Letter> chunk(letters.begin() + at,
                                                 letters.begin() + std::min(letters.size(), at + n));
            pieces = pieces * GroupWord(chunk);
            at += n;
        }
        EXPECT_EQ(whole, pieces);
        for (std::size_t i = 1; i < whole.length(); ++i) {
            const auto& p = whole.letters()[i - 1];
            const auto& q = whole.letters()[i];
            EXPECT_FALSE(p.gen == q.gen && p.exp == -q.exp);
        }
    }
}

TEST(KanLoopGroup, Generators)
{
    auto circle = group_of(s(1));
    EXPECT_EQ(circle.generators(0).size(), 1u);
    EXPECT_EQ(circle.generators(1).size(), 1u);
    EXPECT_TRUE(group_of(shared(point())).generators(0).empty());
    auto sphere = group_of(s(2));
    EXPECT_TRUE(sphere.generators(0).empty());
    EXPECT_EQ(sphere.generators(1).size(), 1u);
}

TEST(KanLoopGroup, DegenerateSimplicesGiveTheIdentity)
{
    auto g = group_of(s(2));
    const auto& base = g.base();
    Simplex x{2, 0, {}};
    EXPECT_TRUE(g.tau(base.degeneracy(x, 0)).is_identity());
    EXPECT_FALSE(g.tau(base.degeneracy(x, 1)).is_identity());
}

TEST(KanLoopGroup, AbelianizedPiZeroIsFirstHomology)
{
    auto s1 = s(1);
    auto torus = shared(product(*s1, *s1));
    auto figure_eight = wedge_at(s1, Basepoint{0}, s1, Basepoint{0}).total;
    std::vector<std::pair<std::string, SSetPtr>> spaces{
        {"S1", s1},
        {"S2", s(2)},
        {"torus", torus},
        {"S1 v S1", figure_eight},
        {"smash S1", sphere_model(1, SphereModel::paper).space},
        {"smash S2", sphere_model(2, SphereModel::paper).space},
        {"simplex 3", shared(standard_simplex(3))},
    };
    for (const auto& [name, x] : spaces)
        EXPECT_EQ(h1_via_pi0(group_of(x)), h1(*x)) << name;
    EXPECT_EQ(h1_via_pi0(group_of(torus)), Z(2));
    EXPECT_EQ(h1_via_pi0(group_of(s1)), Z(1));
}

TEST(KanLoopGroup, DataFiles)
{
    for (const char* name : {"s1.sset", "s1_two_cells.sset", "torus.sset", "s1vs1.sset"}) {
        auto loaded = cli::load_sset(data_path(name));
        EXPECT_EQ(h1_via_pi0(kan_loop_group(loaded.space, loaded.base())), h1(*loaded.space)) << name;
    }
}

TEST(KanLoopGroup, IdentitiesHold)
{
    auto s1 = s(1);
    for (const auto& x : {s1, s(2), shared(product(*s1, *s1)), shared(standard_simplex(3)),
                          sphere_model(2, SphereModel::paper).space}) {
        auto v = check_identities(group_of(x), 1000, 6, 7);
        EXPECT_TRUE(v.passed) << v.identity << " on " << v.counterexample;
        EXPECT_GT(v.checks, 0);
    }
}

TEST(KanLoopGroup, IdentityCheckIsReproducible)
{
    auto g = group_of(shared(standard_simplex(3)));
    auto a = check_identities(g, 300, 6, 42);
    auto b = check_identities(g, 300, 6, 42);
    EXPECT_EQ(a.checks, b.checks);
    auto p = perturbed(g);
    auto u = check_identities(p, 300, 6, 42);
    auto w = check_identities(p, 300, 6, 42);
    EXPECT_EQ(u.counterexample, w.counterexample);
    EXPECT_EQ(u.checks, w.checks);
}

TEST(KanLoopGroup, PerturbedFaceIsCaught)
{
    auto p = perturbed(group_of(shared(standard_simplex(3))));
    auto v = check_identities(p, 1000, 6, 7);
    EXPECT_FALSE(v.passed);
    EXPECT_EQ(v.identity, "d0 d1 = d0 d0");
    EXPECT_GE(v.degree, 2);
    EXPECT_FALSE(v.counterexample.empty());
}

TEST(KanLoopGroup, RejectsBadInput)
{
    auto two_points = coproduct(shared(point()), shared(point())).object;
    EXPECT_THROW(group_of(two_points), KanError);
    auto g = group_of(s(2));
    auto w = g.tau(g.base().degeneracy(Simplex{2, 0, {}}, 1));
    EXPECT_THROW(g.face(w, 5), KanError);
    EXPECT_THROW(g.degeneracy(w, 5), KanError);
}
