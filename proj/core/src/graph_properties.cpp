#include "mtg/graph_properties.hpp"

#include <algorithm>

namespace mtg {

std::optional<AlternatingQuadruple> has_alternating_quadruple(const Graph& g) {
    const int n = g.order();
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = 0; b < n; ++b) {
            if (b == a || !g.adjacent(a, b)) continue;
            for (Vertex c = 0; c < n; ++c) {
                if (c == a || c == b || g.adjacent(a, c)) continue;
                for (Vertex d = 0; d < n; ++d) {
                    if (d == a || d == b || d == c) continue;
                    if (g.adjacent(c, d) && !g.adjacent(b, d)) return AlternatingQuadruple{a, b, c, d};
                }
            }
        }
    }
    return std::nullopt;
}

bool is_threshold_forbidden_free(const Graph& g) {
    const int n = g.order();
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            for (Vertex c = b + 1; c < n; ++c) {
                for (Vertex d = c + 1; d < n; ++d) {
                    const std::array<Vertex, 4> q{a, b, c, d};
                    std::array<int, 4> deg{};
                    int edges = 0;
                    for (int i = 0; i < 4; ++i) {
                        for (int j = i + 1; j < 4; ++j) {
                            if (g.adjacent(q[static_cast<std::size_t>(i)], q[static_cast<std::size_t>(j)])) {
                                ++edges;
                                ++deg[static_cast<std::size_t>(i)];
                                ++deg[static_cast<std::size_t>(j)];
                            }
                        }
                    }
                    std::sort(deg.begin(), deg.end());
                    const bool two_k2 = edges == 2 && deg == std::array<int, 4>{1, 1, 1, 1};
                    const bool p4 = edges == 3 && deg == std::array<int, 4>{1, 1, 2, 2};
                    const bool c4 = edges == 4 && deg == std::array<int, 4>{2, 2, 2, 2};
                    if (two_k2 || p4 || c4) return false;
                }
            }
        }
    }
    return true;
}

} // namespace mtg
