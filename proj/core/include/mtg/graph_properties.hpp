#pragma once

#include <array>
#include <optional>

#include "mtg/graph.hpp"

namespace mtg {

/// Vertices (a, b, c, d) with ab, cd edges and ac, bd nonedges.
using AlternatingQuadruple = std::array<Vertex, 4>;

/// Lexicographically first alternating quadruple, if any. Its presence rules
/// out a single-threshold representation: the two edge sums add up to the
/// same total as the two nonedge sums, yet each edge sum must exceed each
/// nonedge sum.
std::optional<AlternatingQuadruple> has_alternating_quadruple(const Graph& g);

/// True iff no four vertices induce 2K2, C4 or P4 (the classical
/// characterization of threshold graphs).
bool is_threshold_forbidden_free(const Graph& g);

} // namespace mtg
