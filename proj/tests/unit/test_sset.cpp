#include <gtest/gtest.h>

#include <random>

#include "gcalc/sset.hpp"
#include "gcalc/sset_format.hpp"
#include "support.hpp"
#include "zoo.hpp"

using namespace gcalc;
using namespace gcalc::test;

namespace {

SMap boundary_inclusion_1()
{
    auto edge = shared(standard_simplex(1));
    auto ends = shared(simplex_boundary(1));
    return SMap(ends, edge, {{Simplex{0, 0, {}}, Simplex{0, 1, {}}}});
}


}  // namespace

TEST(DegeneracyWord, NormalFormIsStrictlyDecreasing)
{
    std::mt19937 rng(11);
    for (int t = 0; t < 300; ++t) {
        std::vector<int> ops;
        const int len = static_cast<int>(rng() % 5);
        for (int i = 0; i < len; ++i)
            ops.push_back(static_cast<int>(rng() % 4));
        DegeneracyWord w(ops);
        for (std::size_t i = 1; i < w.ops().size(); ++i)
            EXPECT_GT(w.ops()[i - 1], w.ops()[i]);
        EXPECT_EQ(w.size(), ops.size());
    }
}

TEST(DegeneracyWord, RewritingIdentityGivesSameRepresentative)
{
    // s_i s_j = s_{j+1} s_i for i <= j
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j)
            EXPECT_EQ(DegeneracyWord({i, j}), DegeneracyWord({j + 1, i}));
}

TEST(DegeneracyWord, NormalizationAgreesWithStepwiseApplication)
{
    auto x = shared(standard_simplex(2));
    std::mt19937 rng(5);
    for (int t = 0; t < 200; ++t) {
        Simplex s = SimplicialSet::generator(2, 0);
        std::vector<int> ops;
        const int len = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < len; ++k)
            ops.push_back(static_cast<int>(rng() % (2 + k + 1)));
        // ops applied in order: s_{ops.back()} ... s_{ops[0]}(x) as a word is reversed
        Simplex stepwise = s;
        for (int op : ops)
            stepwise = x->degeneracy(stepwise, op);
        std::vector<int> word(ops.rbegin(), ops.rend());
        Simplex direct{2, 0, DegeneracyWord(word)};
        EXPECT_EQ(stepwise, direct);
    }
}

TEST(StandardSimplex, CellCounts)
{
    EXPECT_EQ(cell_counts(standard_simplex(0)), (std::vector<int>{1}));
    EXPECT_EQ(cell_counts(standard_simplex(1)), (std::vector<int>{2, 1}));
    EXPECT_EQ(cell_counts(standard_simplex(2)), (std::vector<int>{3, 3, 1}));
    EXPECT_EQ(cell_counts(standard_simplex(4)), (std::vector<int>{5, 10, 10, 5, 1}));
}

TEST(SphereModel, TwoEdgeCircleHasTwoVerticesTwoEdges)
{
    auto s1 = sphere_model(1, SphereModel::paper);
    EXPECT_EQ(cell_counts(*s1.space), (std::vector<int>{2, 2}));
}

TEST(SphereModel, MinimalModelHasTwoCells)
{
    for (int n = 1; n <= 5; ++n) {
        auto s = sphere_model(n);
        EXPECT_EQ(s.space->total_cells(), 2);
        EXPECT_EQ(s.space->count(n), 1);
    }
}

TEST(SphereModel, SmashZeroSphereIsTwoPoints)
{
    auto s0 = sphere_model(0, SphereModel::paper);
    EXPECT_EQ(cell_counts(*s0.space), (std::vector<int>{2}));
    EXPECT_EQ(s0.base.vertex, 0);
}

TEST(SphereModel, HomologyOfBothModels)
{
    for (int n = 1; n <= 3; ++n)
        for (SphereModel m : {SphereModel::minimal, SphereModel::paper}) {
            GradedAbelianGroup h = homology(*sphere_model(n, m).space, 0, n + 1);
            for (int d = 0; d <= n + 1; ++d)
                EXPECT_EQ(h.at(d), (d == 0 || d == n) ? Z() : HomologyGroup{}) << "n=" << n << " d=" << d;
        }
}

TEST(Product, TwoShufflesInSquare)
{
    SimplicialSet sq = product(standard_simplex(1), standard_simplex(1));
    EXPECT_EQ(cell_counts(sq), (std::vector<int>{4, 5, 2}));
}

TEST(Product, WithPointIsCopy)
{
    auto s1 = sphere_model(1, SphereModel::paper);
    SimplicialSet p = product(*s1.space, point());
    EXPECT_EQ(cell_counts(p), cell_counts(*s1.space));
    EXPECT_EQ(homology(p, 0, 2), homology(*s1.space, 0, 2));
}

TEST(Product, MinimalS2SquaredCellCounts)
{
    // (v,v); (v,s),(s,v),(s,s); six pairs s_i s, s_j s with i != j in dim 3; six shuffles in dim 4
    auto s2 = sphere_model(2);
    SimplicialSet p = product(*s2.space, *s2.space);
    EXPECT_EQ(cell_counts(p), (std::vector<int>{1, 0, 3, 6, 6}));
    EXPECT_EQ(p.euler_characteristic(), 4);
    GradedAbelianGroup h = homology(p, 0, 4);
    EXPECT_EQ(bettis(h), (std::vector<int>{1, 0, 2, 0, 1}));
}

TEST(Product, ProjectionsAndPairingCompose)
{
    auto a = sphere_model(2).space;
    auto b = shared(standard_simplex(1));
    Product p(a, b);
    SMap diag = pairing_map(p, p.projection_left(), p.projection_right());
    for (int d = 0; d <= p.object()->dimension(); ++d)
        for (int i = 0; i < p.object()->count(d); ++i)
            EXPECT_EQ(diag.image(d, i), SimplicialSet::generator(d, i));
}

TEST(Pushout, AlongIdentityIsOtherLeg)
{
    auto a = shared(simplex_boundary(1));
    SMap inc = boundary_inclusion_1();
    Pushout po(inc, SMap::identity(a));
    EXPECT_EQ(cell_counts(*po.object()), cell_counts(*inc.target()));
}

TEST(Pushout, TwoIntervalsAlongEndpointsGiveCircle)
{
    SMap inc = boundary_inclusion_1();
    Pushout po(inc, inc);
    EXPECT_EQ(cell_counts(*po.object()), (std::vector<int>{2, 2}));
    GradedAbelianGroup h = homology(*po.object(), 0, 1);
    EXPECT_EQ(h.at(0), Z());
    EXPECT_EQ(h.at(1), Z());
}

TEST(Pushout, IsSymmetricInItsLegs)
{
    auto s2 = sphere_model(2);
    ReducedCone c = reduced_cone(s2);
    SMap to_point = SMap::constant(s2.space, shared(point()), 0);
    Pushout a(c.inclusion, to_point);
    Pushout b(to_point, c.inclusion);
    EXPECT_EQ(cell_counts(*a.object()), cell_counts(*b.object()));
    EXPECT_EQ(homology(*a.object(), 0, 4), homology(*b.object(), 0, 4));
}

TEST(Pushout, EulerCharacteristicIsAdditive)
{
    auto s1 = sphere_model(1, SphereModel::paper);
    ReducedCone c1 = reduced_cone(s1);
    auto s2 = sphere_model(2);
    ReducedCone c2 = reduced_cone(s2);
    for (const ReducedCone* c : {&c1, &c2}) {
        Pushout po(c->inclusion, c->inclusion);
        const SimplicialSet& a = *c->inclusion.source();
        const SimplicialSet& b = *c->inclusion.target();
        EXPECT_EQ(po.object()->euler_characteristic(),
                  2 * b.euler_characteristic() - a.euler_characteristic());
    }
}

TEST(Pushout, CollapsingBoundaryOfTriangleGivesMinimalSphere)
{
    auto tri = shared(standard_simplex(2));
    std::vector<std::vector<bool>> keep = {{true, true, true}, {true, true, true}, {false}};
    SMap q = collapse(tri, keep);
    EXPECT_EQ(cell_counts(*q.target()), (std::vector<int>{1, 0, 1}));
    EXPECT_EQ(bettis(homology(*q.target(), 0, 3)), (std::vector<int>{1, 0, 1, 0}));
}

TEST(Pushout, NeedsAnInjectiveLeg)
{
    auto s2 = sphere_model(2);
    SMap c = SMap::constant(s2.space, shared(point()), 0);
    EXPECT_THROW(Pushout(c, c), SimplicialSetError);
}

TEST(Wedge, WithPointIsIdentity)
{
    auto s2 = sphere_model(2);
    RetractivePresentation w = wedge_at(s2.space, s2.base, shared(point()), Basepoint{0});
    EXPECT_EQ(cell_counts(*w.total), cell_counts(*s2.space));
    for (int d = 0; d <= w.total->dimension(); ++d)
        for (int i = 0; i < w.total->count(d); ++i)
            EXPECT_EQ(w.retraction.image(d, i), SimplicialSet::generator(d, i));
}

TEST(Wedge, TwoMinimalSpheres)
{
    auto s2 = sphere_model(2);
    RetractivePresentation w = wedge_at(s2.space, s2.base, s2.space, s2.base);
    EXPECT_EQ(w.total->total_cells(), 3);
    EXPECT_EQ(bettis(homology(*w.total, 0, 3)), (std::vector<int>{1, 0, 2, 0}));
}

TEST(Wedge, RetractionIsNConnected)
{
    // X ∨ Sⁿ -> X is an isomorphism on homology below n and onto in degree n
    auto s2 = sphere_model(2);
    for (int n = 3; n <= 5; ++n) {
        RetractivePresentation w = wedge_at(s2.space, s2.base, sphere_model(n).space, Basepoint{0});
        ChainComplex src = normalized_chains(*w.total, n + 2);
        ChainComplex tgt = normalized_chains(*s2.space, n + 2);
        ChainMap r{&src, &tgt, induced_chain_map(w.retraction, n + 2)};
        ASSERT_TRUE(r.commutes());
        GradedAbelianGroup fib = mapping_cone(r).homology(0, n + 1);
        for (int d = 0; d <= n + 1; ++d)
            EXPECT_EQ(fib.at(d), d == n + 1 ? Z() : HomologyGroup{}) << "n=" << n << " d=" << d;
    }
}

TEST(Smash, WithSmashZeroSphereIsSame)
{
    auto s2 = sphere_model(2);
    BasedSet sm = smash(s2, sphere_model(0, SphereModel::paper));
    EXPECT_EQ(homology(*sm.space, 0, 3), homology(*s2.space, 0, 3));
    auto s1 = sphere_model(1, SphereModel::paper);
    BasedSet sm1 = smash(s1, sphere_model(0, SphereModel::paper));
    EXPECT_EQ(cell_counts(*sm1.space), cell_counts(*s1.space));
}

TEST(Smash, TwoEdgeCirclesGiveSmashSphere)
{
    auto s1 = sphere_model(1, SphereModel::paper);
    BasedSet s2 = smash(s1, s1);
    EXPECT_EQ(s2.space->euler_characteristic(), 2);
    EXPECT_EQ(cell_counts(*s2.space), cell_counts(*sphere_model(2, SphereModel::paper).space));
}

TEST(Smash, WithPointIsPoint)
{
    auto s2 = sphere_model(2);
    BasedSet sm = smash(s2, BasedSet{shared(point()), Basepoint{0}});
    EXPECT_EQ(cell_counts(*sm.space), (std::vector<int>{1}));
}

TEST(ReducedCone, IsContractibleAndContainsA)
{
    auto s2 = sphere_model(2);
    ReducedCone c = reduced_cone(s2);
    EXPECT_TRUE(c.inclusion.injective());
    EXPECT_EQ(bettis(homology(*c.cone.space, 0, 4)), (std::vector<int>{1, 0, 0, 0, 0}));
    EXPECT_TRUE(is_one_reduced(*c.cone.space));
}

TEST(FiberwiseSuspension, OverPointIsUnreducedSuspension)
{
    auto s0 = sphere_model(0, SphereModel::paper).space;
    FiberwiseSuspension s = fiberwise_suspension(SMap::constant(s0, shared(point()), 0));
    EXPECT_EQ(bettis(homology(*s.suspension, 0, 2)), (std::vector<int>{1, 1, 0}));
    auto s2 = sphere_model(2).space;
    FiberwiseSuspension t = fiberwise_suspension(SMap::constant(s2, shared(point()), 0));
    EXPECT_EQ(bettis(homology(*t.suspension, 0, 4)), (std::vector<int>{1, 0, 0, 1, 0}));
}

TEST(FiberwiseSuspension, OfIdentityIsBase)
{
    auto t = parse_sset("sset v1\nd0 v\nd1 a: v v\nd1 b: v v\nd1 c: v v\nd2 U: b c a\nd2 L: a c b\n").space;
    FiberwiseSuspension s = fiberwise_suspension(SMap::identity(t));
    EXPECT_EQ(homology(*s.suspension, 0, 3), homology(*t, 0, 3));
    // the structure map is a homology isomorphism
    ChainComplex src = normalized_chains(*s.suspension, 4);
    ChainComplex tgt = normalized_chains(*t, 4);
    ChainMap m{&src, &tgt, induced_chain_map(s.to_base, 4)};
    EXPECT_TRUE(mapping_cone(m).homology(0, 3).is_zero());
}

TEST(FiberwiseSuspension, SquareIsAPushout)
{
    auto s1 = sphere_model(1, SphereModel::paper).space;
    FiberwiseSuspension s = fiberwise_suspension(SMap::constant(s1, shared(point()), 0));
    Pushout po(s.total_in_cone, s.total_in_cone);
    EXPECT_EQ(cell_counts(*po.object()), cell_counts(*s.suspension));
    // both cone maps agree on the total space
    SMap a = s.total_in_cone.then(s.cone_first);
    SMap b = s.total_in_cone.then(s.cone_second);
    for (int d = 0; d <= s1->dimension(); ++d)
        for (int i = 0; i < s1->count(d); ++i)
            EXPECT_EQ(a.image(d, i), b.image(d, i));
}

TEST(FiberwiseSuspension, RaisesConnectivity)
{
    // S^1 -> pt is 1-connected; the fiberwise suspension S^2 -> pt is 2-connected
    auto s1 = sphere_model(1).space;
    FiberwiseSuspension s = fiberwise_suspension(SMap::constant(s1, shared(point()), 0));
    GradedAbelianGroup before = homology(*s1, 1, 3), after = homology(*s.suspension, 1, 3);
    EXPECT_FALSE(before.at(1).is_zero());
    EXPECT_TRUE(after.at(1).is_zero());
}

TEST(Components, Counts)
{
    auto s2 = sphere_model(2).space;
    EXPECT_EQ(components(*s2).size(), 1u);
    Coproduct c = coproduct(s2, s2);
    std::vector<Component> cs = components(*c.object);
    ASSERT_EQ(cs.size(), 2u);
    EXPECT_EQ(cs[0].basepoint, 0);
    EXPECT_EQ(cs[1].basepoint, 1);
    EXPECT_EQ(components(*sphere_model(0, SphereModel::paper).space).size(), 2u);
}

TEST(Components, EveryGeneratorInExactlyOneClass)
{
    auto t = sphere_model(1, SphereModel::paper).space;
    Coproduct c = coproduct(t, sphere_model(2).space);
    std::vector<Component> cs = components(*c.object);
    for (int d = 0; d <= c.object->dimension(); ++d) {
        int total = 0;
        for (const Component& k : cs)
            if (d < static_cast<int>(k.members.size()))
                total += static_cast<int>(k.members[d].size());
        EXPECT_EQ(total, c.object->count(d));
    }
}

TEST(ReduceAt, CollapsesSpanningTree)
{
    auto s1 = sphere_model(1, SphereModel::paper);
    SMap q = reduce_at(s1.space, s1.base);
    EXPECT_EQ(cell_counts(*q.target()), (std::vector<int>{1, 1}));
    auto p2 = sphere_model(2, SphereModel::paper);
    SMap q2 = reduce_at(p2.space, p2.base);
    EXPECT_EQ(q2.target()->count(0), 1);
    EXPECT_FALSE(is_one_reduced(*q2.target()));
    EXPECT_EQ(homology(*q2.target(), 0, 3), homology(*p2.space, 0, 3));
}

TEST(NormalizedChains, Examples)
{
    for (int n = 1; n <= 4; ++n) {
        ChainComplex c = normalized_chains(*sphere_model(n).space, n + 1);
        EXPECT_EQ(c.rank(0), 1);
        EXPECT_EQ(c.rank(n), 1);
        EXPECT_TRUE(c.boundary(n).is_zero());
    }
    ChainComplex p = normalized_chains(*sphere_model(1, SphereModel::paper).space, 2);
    EXPECT_EQ(p.rank(0), 2);
    EXPECT_EQ(p.rank(1), 2);
    EXPECT_EQ(matrix_rank(p.boundary(1)), 1);
    EXPECT_EQ(normalized_chains(standard_simplex(2), 3).euler_characteristic(0, 3), 1);
}

TEST(NormalizedChains, ReducedAtBasepoint)
{
    auto s2 = sphere_model(2);
    GradedAbelianGroup h = normalized_chains(*s2.space, 3, s2.base).homology(0, 2);
    EXPECT_EQ(bettis(h), (std::vector<int>{0, 0, 1}));
}

TEST(Zoo, SimplicialIdentitiesHoldExhaustively)
{
    for (const auto& [name, x] : zoo()) {
        if (x->total_cells() > 50)
            continue;
        EXPECT_NO_THROW(x->check_identities()) << name;
    }
}

TEST(Zoo, BoundarySquaresToZero)
{
    for (const auto& [name, x] : zoo()) {
        ChainComplex c = normalized_chains(*x, x->dimension() + 1);
        EXPECT_TRUE(c.boundary_squares_to_zero()) << name;
    }
}

TEST(Zoo, EulerCharacteristicFromChainsMatchesCells)
{
    for (const auto& [name, x] : zoo()) {
        const int top = x->dimension() + 1;
        GradedAbelianGroup h = normalized_chains(*x, top + 1).homology(0, top);
        long chi = 0;
        for (int d = 0; d <= top; ++d)
            chi += (d % 2 ? -1 : 1) * h.at(d).betti;
        EXPECT_EQ(chi, x->euler_characteristic()) << name;
    }
}

TEST(Maps, InducedChainMapCommutes)
{
    auto s2 = sphere_model(2);
    ReducedCone c = reduced_cone(s2);
    ChainComplex src = normalized_chains(*c.inclusion.source(), 4);
    ChainComplex tgt = normalized_chains(*c.inclusion.target(), 4);
    ChainMap m{&src, &tgt, induced_chain_map(c.inclusion, 4)};
    EXPECT_TRUE(m.commutes());
}

TEST(Maps, FaceMismatchIsRejected)
{
    auto edge = shared(standard_simplex(1));
    // a degenerate edge cannot join two distinct vertices
    EXPECT_THROW(SMap(edge, edge, {{Simplex{0, 0, {}}, Simplex{0, 1, {}}}, {Simplex{0, 0, DegeneracyWord({0})}}}),
                 SimplicialSetError);
}

TEST(Format, MinimalSphere)
{
    LoadedSet s = parse_sset("sset v1\nd0 v\nd2 s: v@s0 v@s0 v@s0\n");
    EXPECT_EQ(s.space->total_cells(), 2);
    EXPECT_EQ(s.base().vertex, 0);
    EXPECT_FALSE(s.declared_base.has_value());
}

TEST(Format, DeclaredBaseIsHonoured)
{
    LoadedSet s = parse_sset("sset v1\nd0 a\nd0 b\nd1 e: b a\nbase b\n");
    EXPECT_EQ(s.base().vertex, 1);
}

TEST(Format, NonNormalWordsAreNormalized)
{
    LoadedSet a = parse_sset("sset v1\nd0 v\nd3 t: v@s1s0 v@s0s0 v@s0s0 v@s0s0\n");
    LoadedSet b = parse_sset("sset v1\nd0 v\nd3 t: v@s1s0 v@s1s0 v@s1s0 v@s1s0\n");
    EXPECT_EQ(a.space->faces(3, 0), b.space->faces(3, 0));
}

TEST(Format, BrokenFaceNamesTheSimplex)
{
    try {
        parse_sset("sset v1\nd0 v\nd2 t: v@s0 x v@s0\n");
        FAIL();
    }
    catch (const FormatError& e) {
        EXPECT_EQ(e.line(), 3);
        EXPECT_NE(std::string(e.what()).find("t"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("'x'"), std::string::npos);
    }
}

TEST(Format, IdentityViolationNamesTheSimplex)
{
    // d0 d2 t = d0 b = q but d1 d0 t = d1 a = p
    const std::string text = "sset v1\nd0 p\nd0 q\nd1 a: q p\nd1 b: q p\nd1 c: p p\nd2 t: a c b\n";
    try {
        parse_sset(text);
        FAIL();
    }
    catch (const FormatError& e) {
        EXPECT_NE(std::string(e.what()).find("t"), std::string::npos);
    }
}

TEST(Format, RejectsMissingHeader)
{
    EXPECT_THROW(parse_sset("d0 v\n"), FormatError);
    EXPECT_THROW(parse_sset(""), FormatError);
}

TEST(Format, RoundTripsConstructedSets)
{
    for (const auto& [name, x] : zoo()) {
        LoadedSet back = parse_sset(write_sset(*x, Basepoint{0}));
        EXPECT_EQ(cell_counts(*back.space), cell_counts(*x)) << name;
        for (int d = 1; d <= x->dimension(); ++d)
            for (int i = 0; i < x->count(d); ++i)
                EXPECT_EQ(back.space->faces(d, i), x->faces(d, i)) << name;
    }
}
