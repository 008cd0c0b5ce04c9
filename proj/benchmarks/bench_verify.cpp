#include <benchmark/benchmark.h>

#include "mtg/constructions.hpp"
#include "mtg/graph.hpp"
#include "mtg/representation.hpp"

using namespace mtg;

static void BM_VerifyConstruction(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto g = cycle_graph(n);
    const auto rep = construct_cycle_rep(n);
    for (auto _ : state) benchmark::DoNotOptimize(verify(g, rep));
    state.SetComplexityN(n);
}
BENCHMARK(BM_VerifyConstruction)->RangeMultiplier(2)->Range(8, 512)->Complexity(benchmark::oNSquared);

// Denominators with an lcm past 64 bits force the rational path.
static void BM_VerifyRationalPath(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<Rational> ranks;
    for (int i = 0; i < n; ++i) ranks.emplace_back(i * 7919 - n, 1000000007 + 2 * (i % 5));
    const Representation rep(ranks, {Rational(0), Rational(1, 3)});
    const auto g = induced_graph(rep);
    for (auto _ : state) benchmark::DoNotOptimize(verify(g, rep));
}
BENCHMARK(BM_VerifyRationalPath)->Arg(64)->Arg(256);

static void BM_ConstructCycle(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(construct_cycle_rep(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ConstructCycle)->Arg(500)->Arg(10000);

BENCHMARK_MAIN();
