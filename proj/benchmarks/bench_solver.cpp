#include <cstdint>

#include <benchmark/benchmark.h>

#include "mtg/graph.hpp"
#include "mtg/solver.hpp"

using namespace mtg;

static void BM_RefuteCycle(benchmark::State& state) {
    const auto g = cycle_graph(static_cast<int>(state.range(0)));
    const int k = static_cast<int>(state.range(1));
    SearchOptions options;
    options.propagate = state.range(2) != 0;
    SearchStats stats;
    for (auto _ : state) benchmark::DoNotOptimize(is_k_threshold(g, k, options, &stats));
    state.counters["nodes"] = static_cast<double>(stats.nodes) / static_cast<double>(state.iterations());
    state.counters["lp_calls"] = static_cast<double>(stats.lp_calls) / static_cast<double>(state.iterations());
}
BENCHMARK(BM_RefuteCycle)
    ->Args({5, 3, 1})
    ->Args({7, 3, 1})
    ->Args({7, 3, 0})
    ->Args({8, 2, 1})
    ->Args({9, 3, 1})
    ->Unit(benchmark::kMillisecond);

static void BM_ThresholdNumberCycle(benchmark::State& state) {
    const auto g = cycle_graph(static_cast<int>(state.range(0)));
    SearchOptions options;
    options.jobs = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(threshold_number(g, 5, options));
}
BENCHMARK(BM_ThresholdNumberCycle)
    ->Args({6, 1})
    ->Args({7, 1})
    ->Args({8, 1})
    ->Args({8, 4})
    ->Unit(benchmark::kMillisecond);

static void BM_SingleThresholdAllFiveVertexGraphs(benchmark::State& state) {
    for (auto _ : state) {
        int yes = 0;
        for (std::uint64_t mask = 0; mask < 1024; ++mask)
            yes += is_k_threshold(graph_from_pair_mask(5, mask), 1) ? 1 : 0;
        benchmark::DoNotOptimize(yes);
    }
}
BENCHMARK(BM_SingleThresholdAllFiveVertexGraphs)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
