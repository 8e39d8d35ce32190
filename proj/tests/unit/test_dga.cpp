#include <gtest/gtest.h>

#include "gcalc/dga.hpp"
#include "gcalc/sset.hpp"
#include "support.hpp"

using namespace gcalc;
using namespace gcalc::test;

namespace {

constexpr int top = 7;

SSetPtr s(int n) { return sphere_model(n).space; }

SSetPtr wedge(int a, int b) { return wedge_at(s(a), Basepoint{0}, s(b), Basepoint{0}).total; }

SSetPtr s2xs2() { return shared(product(*s(2), *s(2))); }

GradedAbelianGroup hom(const AlgebraPtr& a, int hi) { return a->chains().homology(0, hi); }

SMap point_into(const SSetPtr& x) { return SMap::constant(shared(point()), x, 0); }

std::vector<int> every_degree(int n) { return std::vector<int>(n, 1); }

std::vector<int> even_degrees(int n)
{
    std::vector<int> out(n, 0);
    for (int d = 0; d < n; d += 2)
        out[d] = 1;
    return out;
}

struct Catalogue {
    std::string name;
    AlgebraPtr algebra;
    SSetPtr space;  // null for algebras not of the form cobar(X)
};

std::vector<Catalogue> catalogue()
{
    auto a2 = cobar(*s(2), top);
    return {
        {"trivial", trivial_algebra(top), nullptr},
        {"cobar S2", a2, s(2)},
        {"cobar S3", cobar(*s(3), top), s(3)},
        {"cobar S2 v S2", cobar(*wedge(2, 2), top), wedge(2, 2)},
        {"cobar S2 x S2", cobar(*s2xs2(), 5), s2xs2()},
        {"cobar S2 (x) cobar S2", tensor_product({a2, a2}), nullptr},
    };
}

}  // namespace

TEST(Cobar, PointIsTheGroundRing)
{
    auto a = cobar(point(), top);
    EXPECT_EQ(bettis(hom(a, top - 1)), (std::vector<int>{1, 0, 0, 0, 0, 0, 0}));
}

TEST(Cobar, LoopsOnSpheres)
{
    auto a2 = cobar(*s(2), top);
    EXPECT_EQ(a2->rank(1), 1);
    EXPECT_EQ(bettis(hom(a2, top - 1)), every_degree(top));
    auto a3 = cobar(*s(3), top);
    EXPECT_EQ(bettis(hom(a3, top - 1)), even_degrees(top));
    EXPECT_TRUE(torsion_free(hom(a3, top - 1)));
}

TEST(Cobar, WedgeIsTensorAlgebraOnTwoGenerators)
{
    auto a = cobar(*wedge(2, 2), top);
    EXPECT_EQ(bettis(hom(a, 5)), (std::vector<int>{1, 2, 4, 8, 16, 32}));
}

TEST(Cobar, ProductMatchesKunneth)
{
    auto a = cobar(*s2xs2(), 5);
    EXPECT_EQ(bettis(hom(a, 4)), (std::vector<int>{1, 2, 3, 4, 5}));
    auto a2 = cobar(*s(2), 5);
    EXPECT_EQ(hom(tensor_product({a2, a2}), 4), hom(a, 4));
}

TEST(Cobar, RejectsSetsThatAreNotOneReduced)
{
    auto smash = sphere_model(2, SphereModel::paper).space;
    try {
        cobar(*smash, top);
        FAIL() << "expected NotReducedError";
    } catch (const NotReducedError& e) {
        EXPECT_FALSE(e.simplex().empty());
        EXPECT_NE(std::string(e.what()).find(e.simplex()), std::string::npos);
    }
    EXPECT_THROW(cobar(*s(1), top), NotReducedError);
}

TEST(Cobar, AlgebraAxiomsHold)
{
    for (const auto& c : catalogue())
        EXPECT_EQ(c.algebra->verify(5), std::nullopt) << c.name;
}

TEST(Cobar, TensorDecomposesIntoFactors)
{
    auto a2 = cobar(*s(2), top);
    auto a3 = cobar(*s(3), top);
    auto t = tensor_product({a2, a3});
    EXPECT_EQ(t->factor_count(), 2);
    for (int d = 0; d <= 4; ++d) {
        for (int i = 0; i < t->rank(d); ++i) {
            auto parts = t->decompose(BasisRef{d, i});
            ASSERT_EQ(parts.size(), 2u);
            EXPECT_EQ(parts[0].deg + parts[1].deg, d);
        }
    }
    EXPECT_THROW(tensor_product({}), DgaError);
}

TEST(Modules, StandardModulesVerify)
{
    for (const auto& c : catalogue()) {
        EXPECT_EQ(regular_bimodule(c.algebra).verify(4), std::nullopt) << c.name;
        EXPECT_EQ(trivial_module(c.algebra, c.algebra, unit_complex(top)).verify(4), std::nullopt) << c.name;
    }
    auto a = cobar(*s(2), top);
    auto sum = coordinate_sum_module({a, a}, {regular_bimodule(a), regular_bimodule(a)});
    EXPECT_EQ(sum.verify(4), std::nullopt);
    EXPECT_EQ(sum.left_algebra()->factor_count(), 2);
}

TEST(Modules, BrokenActionIsReported)
{
    auto a = cobar(*s(2), top);
    ModuleAction nothing{a, [](BasisRef, BasisRef) { return SparseVector{}; }};
    DgModule broken("broken", a->chains(), nothing, std::nullopt);
    EXPECT_NE(broken.verify(3), std::nullopt);
}

TEST(Modules, CoordinateSumRejectsMismatches)
{
    auto a = cobar(*s(2), top);
    auto b = cobar(*s(3), top);
    EXPECT_THROW(coordinate_sum_module({a, a}, {regular_bimodule(a)}), DgaError);
    EXPECT_THROW(coordinate_sum_module({a, b}, {regular_bimodule(a), regular_bimodule(a)}), DgaError);
    EXPECT_THROW(coordinate_sum_module(tensor_product({a, a}), {{2, regular_bimodule(a)}}, a), DgaError);
}

TEST(Modules, DirectSumNeedsMatchingAlgebras)
{
    auto a = cobar(*s(2), top);
    auto b = cobar(*s(3), top);
    auto m = direct_sum(regular_bimodule(a), regular_bimodule(a));
    EXPECT_EQ(m.chains().rank(2), 2 * a->rank(2));
    EXPECT_THROW(direct_sum(regular_bimodule(a), regular_bimodule(b)), DgaError);
}

TEST(EmFiber, IdentityHasContractibleFiber)
{
    auto c = em_fiber(SMap::identity(s(2)), top);
    EXPECT_EQ(bettis(c.homology(0, top - 1)), (std::vector<int>{1, 0, 0, 0, 0, 0, 0}));
}

TEST(EmFiber, PathFibration)
{
    auto c = em_fiber(point_into(s(2)), top);
    EXPECT_EQ(bettis(c.homology(0, top - 1)), every_degree(top));
    auto d = em_fiber(point_into(s(3)), top);
    EXPECT_EQ(bettis(d.homology(0, top - 1)), even_degrees(top));
}

TEST(EmFiber, WedgeRetraction)
{
    // The fiber of S2 v S3 -> S2 is S3 ⋊ ΩS2, with reduced homology H(S3) ⊗ H(ΩS2).
    auto w = wedge_at(s(2), Basepoint{0}, s(3), Basepoint{0});
    auto c = em_fiber(w.retraction, top);
    EXPECT_EQ(bettis(c.homology(0, top - 1)), (std::vector<int>{1, 0, 0, 1, 1, 1, 1}));
}

TEST(EmFiber, TrivialFibration)
{
    Product p(s(2), s(3));
    auto c = em_fiber(p.projection_left(), top);
    EXPECT_EQ(bettis(c.homology(0, top - 1)), (std::vector<int>{1, 0, 0, 1, 0, 0, 0}));
}

TEST(EmFiber, ProductBaseAgreesWithKunneth)
{
    auto direct = em_fiber(point_into(s2xs2()), 5);
    auto one = em_fiber(point_into(s(2)), 5);
    auto kunneth = tensor(one, one, 5);
    EXPECT_EQ(direct.homology(0, 4), kunneth.homology(0, 4));
}

TEST(EmFiber, BaseMustBeOneReduced)
{
    auto smash = sphere_model(2, SphereModel::paper).space;
    EXPECT_THROW(em_fiber(point_into(smash), top), NotReducedError);
}

TEST(Bar, GroundRing)
{
    auto k = trivial_algebra(top);
    auto r = trivial_module(k, unit_complex(top), Side::right);
    auto l = trivial_module(k, unit_complex(top), Side::left);
    EXPECT_EQ(bettis(two_sided_bar(r, k, l, top).homology(0, top - 1)), (std::vector<int>{1, 0, 0, 0, 0, 0, 0}));
}

TEST(Bar, RegularOnBothSidesRecoversTheAlgebra)
{
    for (const auto& c : catalogue()) {
        auto m = regular_bimodule(c.algebra);
        auto b = two_sided_bar(m, c.algebra, m, top);
        EXPECT_TRUE(b.boundary_squares_to_zero()) << c.name;
        EXPECT_EQ(b.homology(0, 4), hom(c.algebra, 4)) << c.name;
    }
}

TEST(Bar, BarOfCobarRecoversChains)
{
    for (const auto& c : catalogue()) {
        if (!c.space)
            continue;
        auto r = trivial_module(c.algebra, unit_complex(top), Side::right);
        auto l = trivial_module(c.algebra, unit_complex(top), Side::left);
        auto b = two_sided_bar(r, c.algebra, l, top);
        EXPECT_EQ(b.homology(0, 4), homology(*c.space, 0, 4)) << c.name;
    }
}

TEST(Bar, AcyclicityAgainstAnyModule)
{
    // B(A, A, M) ≃ M.
    for (const auto& c : catalogue()) {
        std::vector<DgModule> modules{regular_bimodule(c.algebra),
                                      trivial_module(c.algebra, c.algebra, unit_complex(top))};
        for (const auto& m : modules) {
            auto b = bar_bimodule(regular_bimodule(c.algebra), c.algebra, m, top);
            EXPECT_EQ(b.chains().homology(0, 4), m.chains().homology(0, 4)) << c.name << " " << m.label();
        }
    }
}

TEST(Bar, CoordinateSumSplitsOverSummands)
{
    auto a = cobar(*s(2), top);
    auto sum = coordinate_sum_module({a, a}, {regular_bimodule(a), regular_bimodule(a)});
    auto t = sum.left_algebra();
    auto r = trivial_module(t, unit_complex(top), Side::right);
    auto b = two_sided_bar(r, t, sum, top);
    // ⊕ over both coordinates of B(Z, A, A) ⊗ B(Z, A, Z) ≃ H(S2).
    EXPECT_EQ(bettis(b.homology(0, 4)), (std::vector<int>{2, 0, 2, 0, 0}));
}

TEST(Bar, BimoduleActionsVerify)
{
    auto a = cobar(*s(2), top);
    auto b = bar_bimodule(regular_bimodule(a), a, regular_bimodule(a), top);
    EXPECT_EQ(b.verify(3), std::nullopt);
    EXPECT_TRUE(b.has_left());
    EXPECT_TRUE(b.has_right());
}

TEST(Bar, ZeroAbsorbs)
{
    auto a = cobar(*s(2), top);
    auto zl = DgModule::zero(a, a, top);
    auto reg = regular_bimodule(a);
    EXPECT_TRUE(two_sided_bar(zl, a, reg, top).homology(0, 5).is_zero());
    EXPECT_TRUE(two_sided_bar(reg, a, zl, top).homology(0, 5).is_zero());
}

TEST(Bar, ModulesMustMatchTheAlgebra)
{
    auto a = cobar(*s(2), top);
    auto b = cobar(*s(3), top);
    EXPECT_THROW(two_sided_bar(regular_bimodule(a), b, regular_bimodule(b), top), DgaError);
    EXPECT_THROW(two_sided_bar(regular_bimodule(b), b, regular_bimodule(a), top), DgaError);
}
