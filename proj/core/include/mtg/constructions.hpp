#pragma once

#include "mtg/representation.hpp"

namespace mtg {

/// Closed-form minimal representation of C_n (n >= 3). Vertex i carries the
/// rank of the (i+1)-th cycle vertex.
///
///   n = 3:  ranks (0,0,0), threshold (0). C_3 = K_3, every sum hits 0.
///   n = 4:  ranks (0,1,0,1), thresholds (9/10, 11/10). Edge sums are 1,
///           nonedge sums 0 and 2.
///   n >= 5: see alternating_cycle_representation().
///
/// Throws std::invalid_argument if n < 3.
Representation construct_cycle_rep(int n);

/// Threshold count of construct_cycle_rep(n): 1, 2 or 4.
int thresholds_count_of_construction(int n);

/// Four-threshold family for C_n. Ranks alternate in sign with growing
/// magnitude, r_i = (-1)^(i-1) * i for i < n, and the closing vertex gets
/// r_n = (-1)^(n-1) * (n - 1/2). Every path edge sums to -1, 1 or 1/2, so one
/// YES band [-11/10, 11/10) catches them; the closing edge v_n v_1 gets its
/// own narrow band of width 1/5 centred on r_1 + r_n (above the path band for
/// odd n, below it for even n).
///
/// Defined for every n >= 3; construct_cycle_rep uses it only from n = 5.
Representation alternating_cycle_representation(int n);

} // namespace mtg
