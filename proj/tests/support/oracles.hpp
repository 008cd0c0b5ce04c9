#pragma once

// Test-only reference implementations. Nothing here calls into the solver
// or the region_index fast path.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "mtg/graph.hpp"
#include "mtg/linear_system.hpp"
#include "mtg/rational.hpp"
#include "mtg/representation.hpp"

namespace mtg::testing {

/// Linear scan: how many thresholds are <= sum.
inline int count_at_most(const Rational& sum, std::span<const Rational> thresholds) {
    int count = 0;
    for (const auto& t : thresholds) {
        if (t <= sum) ++count;
    }
    return count;
}

/// Edge set straight from the definition.
inline std::set<VertexPair> defined_edges(std::span<const Rational> ranks, std::span<const Rational> thresholds) {
    std::set<VertexPair> edges;
    const auto n = static_cast<int>(ranks.size());
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (count_at_most(ranks[static_cast<std::size_t>(u)] + ranks[static_cast<std::size_t>(v)], thresholds) %
                    2 ==
                1) {
                edges.emplace(u, v);
            }
        }
    }
    return edges;
}

inline std::set<VertexPair> edge_set(const Graph& g) {
    const auto e = g.edges();
    return {e.begin(), e.end()};
}

/// Fourier-Motzkin feasibility for homogeneous systems a.z (< | <=) 0.
/// Exponential; meant for a handful of variables.
inline bool fourier_motzkin_feasible(const LinearSystem& sys) {
    struct Row {
        std::vector<Rational> a;
        bool strict;
        bool operator<(const Row& o) const {
            if (strict != o.strict) return strict < o.strict;
            return a < o.a;
        }
    };
    auto normalize = [](Row r) {
        for (const auto& x : r.a) {
            if (!x.is_zero()) {
                const Rational scale = x.sign() > 0 ? x : -x;
                for (auto& y : r.a) y /= scale;
                break;
            }
        }
        return r;
    };
    std::set<Row> rows;
    for (const auto& c : sys.constraints()) rows.insert(normalize({c.coeffs, c.relation == Relation::less}));

    const auto vars = static_cast<std::size_t>(sys.variable_count());
    for (std::size_t j = 0; j < vars; ++j) {
        std::vector<Row> pos, neg;
        std::set<Row> next;
        for (const auto& r : rows) {
            const int s = r.a[j].sign();
            if (s > 0)
                pos.push_back(r);
            else if (s < 0)
                neg.push_back(r);
            else
                next.insert(r);
        }
        for (const auto& p : pos) {
            for (const auto& q : neg) {
                Row combo{std::vector<Rational>(vars), p.strict || q.strict};
                const Rational wp = -q.a[j];
                const Rational wq = p.a[j];
                for (std::size_t i = 0; i < vars; ++i) combo.a[i] = wp * p.a[i] + wq * q.a[i];
                next.insert(normalize(std::move(combo)));
            }
        }
        rows = std::move(next);
    }
    // Only 0 (< | <=) 0 remains.
    return std::none_of(rows.begin(), rows.end(), [](const Row& r) { return r.strict; });
}

inline Rational random_rational(std::mt19937_64& rng, int bound = 1000) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    return {num(rng), den(rng)};
}

/// Random representation: n in [1, max_n], k in [1, max_k], entries p/q with
/// |p|, q <= bound.
inline Representation random_representation(std::mt19937_64& rng, int max_n, int max_k, int bound = 1000,
                                            int fixed_k = 0) {
    std::uniform_int_distribution<int> pick_n(1, max_n);
    std::uniform_int_distribution<int> pick_k(1, max_k);
    const int n = pick_n(rng);
    const int k = fixed_k > 0 ? fixed_k : pick_k(rng);
    std::vector<Rational> ranks;
    for (int i = 0; i < n; ++i) ranks.push_back(random_rational(rng, bound));
    std::set<Rational> distinct;
    while (static_cast<int>(distinct.size()) < k) distinct.insert(random_rational(rng, bound));
    return Representation(std::move(ranks), std::vector<Rational>(distinct.begin(), distinct.end()));
}

} // namespace mtg::testing
