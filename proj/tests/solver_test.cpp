#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "mtg/constructions.hpp"
#include "mtg/graph.hpp"
#include "mtg/graph_properties.hpp"
#include "mtg/solver.hpp"

using namespace mtg;

namespace {

std::vector<Graph> all_graphs(int n) {
    std::vector<Graph> out;
    const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < count; ++mask) out.push_back(graph_from_pair_mask(n, mask));
    return out;
}

std::optional<Representation> checked(const Graph& g, int k, const SearchOptions& options = {}) {
    auto rep = is_k_threshold(g, k, options);
    if (rep) {
        EXPECT_EQ(rep->threshold_count(), k);
        EXPECT_TRUE(verify(g, *rep).ok);
    }
    return rep;
}

} // namespace

TEST(IsKThreshold, Examples) {
    EXPECT_FALSE(checked(cycle_graph(4), 1));
    EXPECT_TRUE(checked(cycle_graph(4), 2));
    EXPECT_FALSE(checked(cycle_graph(5), 2));
    EXPECT_FALSE(checked(cycle_graph(5), 3));
    EXPECT_TRUE(checked(cycle_graph(5), 4));
    EXPECT_TRUE(checked(complete_graph(4), 1));
    EXPECT_TRUE(checked(Graph(4), 1));
    EXPECT_TRUE(checked(Graph(1), 3));
}

TEST(IsKThreshold, RejectsBadK) { EXPECT_THROW(is_k_threshold(cycle_graph(4), 0), std::invalid_argument); }

TEST(IsKThreshold, ForcedAssignmentUsesOneCheck) {
    SearchStats stats;
    EXPECT_FALSE(is_k_threshold(cycle_graph(6), 1, {}, &stats));
    EXPECT_EQ(stats.lp_calls, 1U);
    EXPECT_EQ(stats.nodes, 0U);
}

TEST(IsKThreshold, OptionsDoNotChangeAnswers) {
    std::vector<SearchOptions> variants(4);
    variants[1].propagate = false;
    variants[2].symmetry_breaking = false;
    variants[3].shallow_stride = 1;
    variants[3].propagate = false;
    for (int n = 4; n <= 7; ++n) {
        for (int k = 1; k <= 4; ++k) {
            const bool expected = k >= (n == 4 ? 2 : 4);
            for (const auto& options : variants) {
                EXPECT_EQ(checked(cycle_graph(n), k, options).has_value(), expected) << "n=" << n << " k=" << k;
            }
        }
    }
}

TEST(IsKThreshold, ParallelSearchMatchesSequential) {
    SearchOptions parallel;
    parallel.jobs = 3;
    for (int n = 4; n <= 8; ++n) {
        for (int k = 2; k <= 4; ++k) {
            const auto g = cycle_graph(n);
            EXPECT_EQ(is_k_threshold(g, k), is_k_threshold(g, k, parallel)) << "n=" << n << " k=" << k;
        }
    }
    for (const auto& g : {path_graph(6), cycle_graph(6).with_toggled(0, 3), graph_from_pair_mask(6, 0x5a5a)}) {
        EXPECT_EQ(threshold_number(g, 5).witness, threshold_number(g, 5, parallel).witness);
    }
}

TEST(ThresholdNumber, Cycles) {
    const std::array<int, 6> expected{1, 2, 4, 4, 4, 4};
    for (int n = 3; n <= 8; ++n) {
        const auto result = threshold_number(cycle_graph(n), 5);
        ASSERT_FALSE(result.exceeded()) << n;
        EXPECT_EQ(*result.value, expected[static_cast<std::size_t>(n - 3)]) << n;
        EXPECT_EQ(*result.value, thresholds_count_of_construction(n));
        EXPECT_TRUE(verify(cycle_graph(n), *result.witness).ok);
    }
}

TEST(ThresholdNumber, PathsAndTrivialGraphs) {
    EXPECT_EQ(threshold_number(path_graph(4), 5).value, 2);
    EXPECT_FALSE(is_k_threshold(path_graph(4), 1));
    EXPECT_EQ(threshold_number(Graph(1), 5).value, 1);
    EXPECT_EQ(threshold_number(Graph(1), 1).witness->threshold_count(), 1);
}

TEST(ThresholdNumber, Exceeded) {
    const auto result = threshold_number(cycle_graph(7), 3);
    EXPECT_TRUE(result.exceeded());
    EXPECT_FALSE(result.witness.has_value());
    EXPECT_EQ(result.k_max, 3);
    EXPECT_THROW(threshold_number(cycle_graph(7), 0), std::invalid_argument);
}

TEST(SolverProperties, SingleThresholdMatchesForbiddenSubgraphOracle) {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& g : all_graphs(n)) {
            const bool feasible = checked(g, 1).has_value();
            ASSERT_EQ(feasible, is_threshold_forbidden_free(g)) << "n=" << n << " edges=" << g.edge_count();
            if (has_alternating_quadruple(g)) ASSERT_FALSE(feasible);
        }
    }
}

TEST(SolverProperties, Monotone) {
    for (const auto& g : all_graphs(5)) {
        bool previous = false;
        for (int k = 1; k <= 4; ++k) {
            const bool now = checked(g, k).has_value();
            if (previous) ASSERT_TRUE(now) << "k=" << k;
            previous = now;
        }
    }
}

TEST(SolverProperties, EdgeToggleRaisesThresholdNumberByAtMostTwo) {
    for (int n = 2; n <= 5; ++n) {
        const auto graphs = all_graphs(n);
        std::vector<int> theta;
        for (const auto& g : graphs) {
            const auto r = threshold_number(g, 5);
            ASSERT_FALSE(r.exceeded());
            theta.push_back(*r.value);
        }
        const auto pairs = Graph(n).pairs();
        for (std::size_t mask = 0; mask < graphs.size(); ++mask) {
            for (std::size_t b = 0; b < pairs.size(); ++b) {
                const std::size_t toggled = mask ^ (std::size_t{1} << b);
                ASSERT_EQ(graphs[toggled], graphs[mask].with_toggled(pairs[b].u, pairs[b].v));
                ASSERT_LE(theta[toggled], theta[mask] + 2) << "n=" << n << " mask=" << mask;
            }
        }
    }
}
