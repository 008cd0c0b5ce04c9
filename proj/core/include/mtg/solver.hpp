#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "mtg/graph.hpp"
#include "mtg/linear_system.hpp"
#include "mtg/representation.hpp"

namespace mtg {

/// Region in [0, k] for every vertex pair. Edges must sit in odd regions and
/// nonedges in even ones.
struct RegionAssignment {
    int k = 1;
    std::map<VertexPair, int> region;
};

/// Builds t_1 < ... < t_k together with, for each assigned pair in region j,
/// t_j <= x_u + x_v (j >= 1) and x_u + x_v < t_{j+1} (j < k). Pairs missing
/// from the assignment are left unconstrained. Throws std::invalid_argument on
/// a parity violation, an out-of-range region, or a pair outside the graph.
LinearSystem system_for_assignment(const Graph& g, const RegionAssignment& asg);

struct SearchOptions {
    /// Feasibility checks at depth <= n happen every `shallow_stride`
    /// assignments; past depth n they happen after every assignment.
    int shallow_stride = 4;
    /// Negation symmetry for even k: the first nonedge is restricted to the
    /// lower half of the NO regions.
    bool symmetry_breaking = true;
    /// Quadruple exchange propagation on region bounds before each LP call.
    bool propagate = true;
    /// Worker threads for sibling subtrees. Output does not depend on it.
    int jobs = 1;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t lp_calls = 0;
    std::uint64_t propagation_prunes = 0;
    std::uint64_t lp_prunes = 0;
};

/// Exact decision of "g is a k-threshold graph". Depth-first search over
/// parity-correct region assignments with exact LP pruning; the returned
/// representation has exactly k thresholds and passes verify(g, .).
std::optional<Representation> is_k_threshold(const Graph& g, int k, const SearchOptions& options = {},
                                             SearchStats* stats = nullptr);

struct ThresholdNumberResult {
    int k_max = 0;
    std::optional<int> value;              ///< unset when k_max was exceeded
    std::optional<Representation> witness; ///< set together with value

    [[nodiscard]] bool exceeded() const { return !value.has_value(); }
};

/// Smallest k <= k_max with a k-threshold representation. Throws
/// std::invalid_argument if k_max < 1.
ThresholdNumberResult threshold_number(const Graph& g, int k_max, const SearchOptions& options = {},
                                       SearchStats* stats = nullptr);

} // namespace mtg
