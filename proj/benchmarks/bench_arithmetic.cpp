#include <random>

#include <array>

#include <benchmark/benchmark.h>

#include "mtg/linear_system.hpp"
#include "mtg/rational.hpp"

using namespace mtg;

static void BM_RationalAddMul(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> d(1, 1000);
    std::vector<Rational> xs;
    for (int i = 0; i < 256; ++i) xs.emplace_back(d(rng) - 500, d(rng));
    Rational acc;
    for (auto _ : state) {
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) acc.add_product(xs[i], xs[i + 1]);
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * 255);
}
BENCHMARK(BM_RationalAddMul);

static void BM_RationalParse(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(Rational::parse("-1234.5678"));
        benchmark::DoNotOptimize(Rational::parse("27/5"));
    }
}
BENCHMARK(BM_RationalParse);

// A chain x0 < x1 < ... < x_{m-1} closed by x_{m-1} <= x0: infeasible.
static void BM_CheckFeasibleCycle(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    LinearSystem sys(m, 0);
    for (int i = 0; i + 1 < m; ++i) sys.add_sums(std::array{i}, Relation::less, std::array{i + 1});
    sys.add_sums(std::array{m - 1}, Relation::less_equal, std::array{0});
    for (auto _ : state) benchmark::DoNotOptimize(check_feasible(sys));
}
BENCHMARK(BM_CheckFeasibleCycle)->Arg(8)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
