#include <random>

#include <gtest/gtest.h>

#include "mtg/graph.hpp"
#include "mtg/linear_system.hpp"
#include "mtg/solver.hpp"
#include "support/oracles.hpp"

using namespace mtg;
using mtg::testing::fourier_motzkin_feasible;

namespace {

void expect_consistent(const LinearSystem& sys, const FeasibilityResult& result) {
    if (result.feasible()) {
        EXPECT_FALSE(result.farkas.has_value());
        EXPECT_TRUE(sys.satisfied_by(*result.witness));
    } else {
        ASSERT_TRUE(result.farkas.has_value());
        EXPECT_TRUE(is_farkas_certificate(sys, *result.farkas));
    }
}

RegionAssignment c4_assignment(int nonedge02, int nonedge13) {
    RegionAssignment asg;
    asg.k = 2;
    for (const auto& e : cycle_graph(4).edges()) asg.region[e] = 1;
    asg.region[{0, 2}] = nonedge02;
    asg.region[{1, 3}] = nonedge13;
    return asg;
}

} // namespace

TEST(CheckFeasible, Contradiction) {
    // variables: x (rank 0), t1
    LinearSystem sys(1, 1);
    const int x = sys.rank_var(0), t1 = sys.threshold_var(1);
    sys.add_sums(std::array{t1}, Relation::less_equal, std::array{x});
    sys.add_sums(std::array{x}, Relation::less, std::array{t1});
    const auto result = check_feasible(sys);
    EXPECT_FALSE(result.feasible());
    expect_consistent(sys, result);
    EXPECT_EQ(*result.farkas, (std::vector<Rational>{1, 1}));
}

TEST(CheckFeasible, SingleStrictRow) {
    LinearSystem sys(2, 1);
    sys.add_sums(std::array{0, 1}, Relation::less, std::array{sys.threshold_var(1)});
    const auto result = check_feasible(sys);
    ASSERT_TRUE(result.feasible());
    expect_consistent(sys, result);
}

TEST(CheckFeasible, NonStrictOnlyIsFeasibleAtOrigin) {
    LinearSystem sys(2, 1);
    sys.add_sums(std::array{0}, Relation::less_equal, std::array{1});
    sys.add_sums(std::array{1}, Relation::less_equal, std::array{0});
    const auto result = check_feasible(sys);
    ASSERT_TRUE(result.feasible());
    EXPECT_EQ(*result.witness, std::vector<Rational>(3));
}

TEST(CheckFeasible, EmptySystem) {
    const LinearSystem sys(0, 0);
    EXPECT_TRUE(check_feasible(sys).feasible());
}

TEST(CheckFeasible, FourCycleSingleThreshold) {
    const auto g = cycle_graph(4);
    RegionAssignment asg;
    for (const auto& p : g.pairs()) asg.region[p] = g.adjacent(p.u, p.v) ? 1 : 0;
    const auto sys = system_for_assignment(g, asg);
    const auto result = check_feasible(sys);
    EXPECT_FALSE(result.feasible());
    expect_consistent(sys, result);
    EXPECT_FALSE(fourier_motzkin_feasible(sys));
}

TEST(SystemForAssignment, FourCycleBothNonedgesLow) {
    const auto sys = system_for_assignment(cycle_graph(4), c4_assignment(0, 0));
    // t1 < t2, then per edge t1 <= s < t2, per nonedge s < t1.
    EXPECT_EQ(sys.size(), 1U + 4 * 2 + 2);
    const auto result = check_feasible(sys);
    EXPECT_FALSE(result.feasible());
    expect_consistent(sys, result);
    EXPECT_FALSE(fourier_motzkin_feasible(sys));
}

TEST(SystemForAssignment, FourCycleSplitNonedges) {
    const auto sys = system_for_assignment(cycle_graph(4), c4_assignment(0, 2));
    const auto result = check_feasible(sys);
    ASSERT_TRUE(result.feasible());
    expect_consistent(sys, result);
    EXPECT_TRUE(fourier_motzkin_feasible(sys));
    // The hand-built witness ranks (0,1,0,1), thresholds (9/10, 11/10).
    EXPECT_TRUE(sys.satisfied_by(std::vector<Rational>{0, 1, 0, 1, Rational(9, 10), Rational(11, 10)}));
}

TEST(SystemForAssignment, RejectsBadAssignments) {
    const auto g = cycle_graph(4);
    RegionAssignment parity = c4_assignment(0, 2);
    parity.region[{0, 1}] = 2;
    EXPECT_THROW(system_for_assignment(g, parity), std::invalid_argument);
    RegionAssignment range = c4_assignment(0, 4);
    EXPECT_THROW(system_for_assignment(g, range), std::invalid_argument);
    RegionAssignment outside = c4_assignment(0, 2);
    outside.region[{0, 7}] = 0;
    EXPECT_THROW(system_for_assignment(g, outside), std::invalid_argument);
}

TEST(CheckFeasible, AgreesWithFourierMotzkinOnRandomSystems) {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> rows(1, 9);
    std::bernoulli_distribution strict(0.5);
    int feasible = 0;
    int infeasible = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int vars = 2 + trial % 4;
        LinearSystem sys(vars, 0);
        const int m = rows(rng);
        for (int r = 0; r < m; ++r) {
            std::vector<Rational> a;
            for (int j = 0; j < vars; ++j) a.emplace_back(coeff(rng));
            sys.add(std::move(a), strict(rng) ? Relation::less : Relation::less_equal);
        }
        const auto result = check_feasible(sys);
        expect_consistent(sys, result);
        ASSERT_EQ(result.feasible(), fourier_motzkin_feasible(sys)) << "trial " << trial;
        (result.feasible() ? feasible : infeasible) += 1;
    }
    EXPECT_GT(feasible, 20);
    EXPECT_GT(infeasible, 20);
}

TEST(CheckFeasible, AgreesWithFourierMotzkinOnSmallAssignments) {
    // Every parity-correct assignment of C4 and P4 with k = 2: 6 variables.
    for (const auto& g : {cycle_graph(4), path_graph(4)}) {
        std::vector<VertexPair> nonedges;
        for (const auto& p : g.pairs()) {
            if (!g.adjacent(p.u, p.v)) nonedges.push_back(p);
        }
        for (int mask = 0; mask < (1 << nonedges.size()); ++mask) {
            RegionAssignment asg;
            asg.k = 2;
            for (const auto& e : g.edges()) asg.region[e] = 1;
            for (std::size_t i = 0; i < nonedges.size(); ++i) asg.region[nonedges[i]] = ((mask >> i) & 1) != 0 ? 2 : 0;
            const auto sys = system_for_assignment(g, asg);
            const auto result = check_feasible(sys);
            expect_consistent(sys, result);
            EXPECT_EQ(result.feasible(), fourier_motzkin_feasible(sys));
        }
    }
}
