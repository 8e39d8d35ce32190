#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "gcalc/calculus.hpp"
#include "gcalc/chains.hpp"
#include "gcalc/dga.hpp"
#include "gcalc/kan.hpp"

using namespace gcalc;

namespace {

SSetPtr sphere(int n) { return sphere_model(n).space; }

SSetPtr two_points()
{
    SimplicialSet::Builder b;
    b.add_vertex("a");
    b.add_vertex("b");
    return std::make_shared<const SimplicialSet>(std::move(b).build());
}

SparseIntMatrix random_matrix(int n, std::uint32_t seed)
{
    std::mt19937 rng(seed);
    std::vector<std::vector<Coeff>> rows(n, std::vector<Coeff>(n));
    for (auto& row : rows)
        for (auto& x : row)
            x = (rng() % 4 == 0) ? static_cast<Coeff>(rng() % 19) - 9 : 0;
    return SparseIntMatrix::from_dense(rows);
}

}  // namespace

static void BM_SmithNormalForm(benchmark::State& state)
{
    SparseIntMatrix m = random_matrix(static_cast<int>(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(8, 64);

static void BM_BoundarySmithNormalForm(benchmark::State& state)
{
    auto x = product(product(*sphere(2), *sphere(1)), *sphere(2));
    ChainComplex c = normalized_chains(x, 6);
    const SparseIntMatrix& d = c.boundary(static_cast<int>(state.range(0)));
    state.counters["rows"] = d.rows();
    state.counters["cols"] = d.cols();
    for (auto _ : state)
        benchmark::DoNotOptimize(smith_normal_form(d));
}
BENCHMARK(BM_BoundarySmithNormalForm)->DenseRange(2, 5);

static void BM_SphereProductHomology(benchmark::State& state)
{
    auto x = product(*sphere(2), *sphere(2));
    for (auto _ : state)
        benchmark::DoNotOptimize(normalized_chains(x, 5).homology(0, 4));
}
BENCHMARK(BM_SphereProductHomology);

static void BM_Cobar(benchmark::State& state)
{
    auto wedge = wedge_at(sphere(2), Basepoint{0}, sphere(2), Basepoint{0}).total;
    const int top = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(cobar(*wedge, top)->chains().homology(0, top - 1));
}
BENCHMARK(BM_Cobar)->DenseRange(4, 8, 2);

static void BM_ChainRuleStable(benchmark::State& state)
{
    ChainRuleOptions opt;
    opt.hi = static_cast<int>(state.range(0));
    auto e = FunctorExpr::q_plus();
    auto f = FunctorExpr::map_from(two_points(), "k2");
    for (auto _ : state)
        benchmark::DoNotOptimize(chain_rule_check(e, f, sphere(2), Basepoint{0}, opt));
}
BENCHMARK(BM_ChainRuleStable)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_ChainRuleUnstable(benchmark::State& state)
{
    ChainRuleOptions opt;
    opt.hi = static_cast<int>(state.range(0));
    auto e = FunctorExpr::map_from(two_points(), "k2");
    auto f = FunctorExpr::identity();
    for (auto _ : state)
        benchmark::DoNotOptimize(chain_rule_check(e, f, sphere(2), Basepoint{0}, opt));
}
BENCHMARK(BM_ChainRuleUnstable)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_KanIdentities(benchmark::State& state)
{
    auto s1 = sphere(1);
    auto g = kan_loop_group(std::make_shared<const SimplicialSet>(product(*s1, *s1)), Basepoint{0});
    for (auto _ : state)
        benchmark::DoNotOptimize(check_identities(g, static_cast<int>(state.range(0)), 6, 7));
}
BENCHMARK(BM_KanIdentities)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
