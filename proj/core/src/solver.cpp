#include "mtg/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace mtg {

namespace {

/// Closed region interval [lo, hi] for one pair. Only parity-correct regions
/// inside it are candidates.
struct Interval {
    int lo;
    int hi;
};

/// Appends t_lo <= x_u + x_v (lo >= 1) and x_u + x_v < t_{hi+1} (hi < k).
void add_pair_bounds(LinearSystem& sys, int k, VertexPair p, int lo, int hi) {
    const std::array<int, 2> sum{sys.rank_var(p.u), sys.rank_var(p.v)};
    const auto tag = std::to_string(p.u) + "-" + std::to_string(p.v);
    if (lo >= 1) {
        const std::array<int, 1> t{sys.threshold_var(lo)};
        sys.add_sums(t, Relation::less_equal, sum, "t" + std::to_string(lo) + " <= s" + tag);
    }
    if (hi < k) {
        const std::array<int, 1> t{sys.threshold_var(hi + 1)};
        sys.add_sums(sum, Relation::less, t, "s" + tag + " < t" + std::to_string(hi + 1));
    }
}

LinearSystem threshold_chain(int n, int k) {
    LinearSystem sys(n, k);
    for (int i = 1; i < k; ++i) {
        const std::array<int, 1> lo{sys.threshold_var(i)};
        const std::array<int, 1> hi{sys.threshold_var(i + 1)};
        sys.add_sums(lo, Relation::less, hi, "t" + std::to_string(i) + " < t" + std::to_string(i + 1));
    }
    return sys;
}

Representation representation_from_point(int n, int k, const std::vector<Rational>& point) {
    std::vector<Rational> ranks(point.begin(), point.begin() + n);
    std::vector<Rational> thresholds(point.begin() + n, point.begin() + n + k);
    return Representation(std::move(ranks), std::move(thresholds));
}

/// Search order: edges first, following a depth-first traversal so that
/// consecutive edges tend to share a vertex, then nonedges lexicographically.
std::vector<VertexPair> search_order(const Graph& g) {
    const int n = g.order();
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (Vertex root = 0; root < n; ++root) {
        if (position[static_cast<std::size_t>(root)] >= 0) continue;
        std::vector<Vertex> stack{root};
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            if (position[static_cast<std::size_t>(v)] >= 0) continue;
            position[static_cast<std::size_t>(v)] = next++;
            for (Vertex w = n - 1; w >= 0; --w) {
                if (g.adjacent(v, w) && position[static_cast<std::size_t>(w)] < 0) stack.push_back(w);
            }
        }
    }
    auto edges = g.edges();
    auto key = [&](const VertexPair& e) {
        const int pu = position[static_cast<std::size_t>(e.u)];
        const int pv = position[static_cast<std::size_t>(e.v)];
        return std::pair{std::max(pu, pv), std::min(pu, pv)};
    };
    std::stable_sort(edges.begin(), edges.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    std::vector<VertexPair> order = std::move(edges);
    for (const auto& p : g.pairs()) {
        if (!g.adjacent(p.u, p.v)) order.push_back(p);
    }
    return order;
}

/// s_p + s_q = s_x + s_y for four distinct vertices.
struct Exchange {
    std::array<int, 4> pair; // p, q, x, y as search positions
};

class RegionSearch {
public:
    RegionSearch(const Graph& g, int k, const SearchOptions& options)
        : graph_(g), k_(k), n_(g.order()), options_(options), order_(search_order(g)) {
        const auto total = order_.size();
        position_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), -1);
        for (std::size_t i = 0; i < total; ++i) {
            position_[index(order_[i].u, order_[i].v)] = static_cast<int>(i);
            position_[index(order_[i].v, order_[i].u)] = static_cast<int>(i);
            is_edge_.push_back(g.adjacent(order_[i].u, order_[i].v));
            if (!is_edge_.back() && first_nonedge_ < 0) first_nonedge_ = static_cast<int>(i);
        }
        touching_.resize(total);
        if (options_.propagate) build_exchanges();
    }

    std::optional<Representation> run(SearchStats& stats) {
        Domains root = initial_domains();
        if (options_.propagate) {
            std::vector<int> all(order_.size());
            for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
            if (!propagate(root, all)) {
                ++stats.propagation_prunes;
                return std::nullopt;
            }
        }
        if (options_.jobs <= 1) return dfs(0, root, stats, nullptr, 0);
        return run_parallel(std::move(root), stats);
    }

    /// Single forced assignment for k = 1: edges in region 1, nonedges in 0.
    std::optional<Representation> solve_forced(SearchStats& stats) {
        Domains dom = initial_domains();
        return leaf(dom, stats);
    }

private:
    struct Domains {
        std::vector<std::int8_t> lo;
        std::vector<std::int8_t> hi;
    };

    [[nodiscard]] std::size_t index(Vertex u, Vertex v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }
    [[nodiscard]] int pos(Vertex u, Vertex v) const { return position_[index(u, v)]; }

    [[nodiscard]] bool parity_ok(int p, int region) const {
        return (region % 2 == 1) == is_edge_[static_cast<std::size_t>(p)];
    }

    [[nodiscard]] Domains initial_domains() const {
        Domains d;
        d.lo.resize(order_.size());
        d.hi.resize(order_.size());
        for (std::size_t p = 0; p < order_.size(); ++p) {
            d.lo[p] = static_cast<std::int8_t>(is_edge_[p] ? 1 : 0);
            const int top = (k_ % 2 == 1) == static_cast<bool>(is_edge_[p]) ? k_ : k_ - 1;
            d.hi[p] = static_cast<std::int8_t>(top);
        }
        return d;
    }

    void build_exchanges() {
        for (Vertex a = 0; a < n_; ++a) {
            for (Vertex b = a + 1; b < n_; ++b) {
                for (Vertex c = b + 1; c < n_; ++c) {
                    for (Vertex d = c + 1; d < n_; ++d) {
                        const int ab = pos(a, b), cd = pos(c, d), ac = pos(a, c), bd = pos(b, d), ad = pos(a, d),
                                  bc = pos(b, c);
                        for (const auto& e :
                             {Exchange{{ab, cd, ac, bd}}, Exchange{{ab, cd, ad, bc}}, Exchange{{ac, bd, ad, bc}}}) {
                            const int id = static_cast<int>(exchanges_.size());
                            exchanges_.push_back(e);
                            for (int p : e.pair) touching_[static_cast<std::size_t>(p)].push_back(id);
                        }
                    }
                }
            }
        }
    }

    /// Tightens [lo, hi] of `target` from s_target = s_a + s_b - s_other.
    bool revise(Domains& d, int target, int other, int a, int b) const {
        const auto t = static_cast<std::size_t>(target);
        const auto o = static_cast<std::size_t>(other);
        const auto ia = static_cast<std::size_t>(a);
        const auto ib = static_cast<std::size_t>(b);
        int lo = d.lo[t];
        int hi = d.hi[t];
        // Strictly higher region means strictly larger sum.
        if (d.lo[ia] > d.hi[o]) lo = std::max(lo, static_cast<int>(d.lo[ib]));
        if (d.lo[ib] > d.hi[o]) lo = std::max(lo, static_cast<int>(d.lo[ia]));
        if (d.hi[ia] < d.lo[o]) hi = std::min(hi, static_cast<int>(d.hi[ib]));
        if (d.hi[ib] < d.lo[o]) hi = std::min(hi, static_cast<int>(d.hi[ia]));
        if (!parity_ok(target, lo)) ++lo;
        if (!parity_ok(target, hi)) --hi;
        if (lo == d.lo[t] && hi == d.hi[t]) return false;
        d.lo[t] = static_cast<std::int8_t>(lo);
        d.hi[t] = static_cast<std::int8_t>(hi);
        return true;
    }

    /// Exchange-identity propagation to a fixpoint. False on an empty domain.
    bool propagate(Domains& d, std::vector<int> work) const {
        std::vector<char> queued(order_.size(), 0);
        for (int p : work) queued[static_cast<std::size_t>(p)] = 1;
        while (!work.empty()) {
            const int changed = work.back();
            work.pop_back();
            queued[static_cast<std::size_t>(changed)] = 0;
            for (int id : touching_[static_cast<std::size_t>(changed)]) {
                const auto& [p, q, x, y] = exchanges_[static_cast<std::size_t>(id)].pair;
                const std::array<std::array<int, 4>, 4> roles{{{p, q, x, y}, {q, p, x, y}, {x, y, p, q}, {y, x, p, q}}};
                for (const auto& r : roles) {
                    if (!revise(d, r[0], r[1], r[2], r[3])) continue;
                    const auto t = static_cast<std::size_t>(r[0]);
                    if (d.lo[t] > d.hi[t]) return false;
                    if (queued[t] == 0) {
                        queued[t] = 1;
                        work.push_back(r[0]);
                    }
                }
            }
        }
        return true;
    }

    [[nodiscard]] LinearSystem system_for(const Domains& d) const {
        LinearSystem sys = threshold_chain(n_, k_);
        for (std::size_t p = 0; p < order_.size(); ++p) add_pair_bounds(sys, k_, order_[p], d.lo[p], d.hi[p]);
        return sys;
    }

    bool lp_feasible(const Domains& d, SearchStats& stats) const {
        ++stats.lp_calls;
        return check_feasible(system_for(d)).feasible();
    }

    std::optional<Representation> leaf(const Domains& d, SearchStats& stats) const {
        ++stats.lp_calls;
        auto result = check_feasible(system_for(d));
        if (!result.feasible()) {
            ++stats.lp_prunes;
            return std::nullopt;
        }
        auto rep = representation_from_point(n_, k_, *result.witness);
        if (!verify(graph_, rep).ok) throw std::logic_error("search produced a representation that fails verify");
        return rep;
    }

    [[nodiscard]] int region_cap(int p) const {
        if (options_.symmetry_breaking && k_ % 2 == 0 && p == first_nonedge_) return k_ / 2;
        return k_;
    }

    /// Children of a node in branch order; each child already propagated and,
    /// when due, LP-checked. `visit` returns true to stop.
    template <typename Visit> bool expand(int depth, const Domains& d, SearchStats& stats, Visit&& visit) const {
        const auto p = static_cast<std::size_t>(depth);
        const int cap = std::min(static_cast<int>(d.hi[p]), region_cap(depth));
        const int assigned = depth + 1;
        const bool last = assigned == static_cast<int>(order_.size());
        const bool check = !last && (assigned > n_ || assigned % std::max(1, options_.shallow_stride) == 0);
        for (int r = d.lo[p]; r <= cap; r += 2) {
            ++stats.nodes;
            Domains child = d;
            child.lo[p] = child.hi[p] = static_cast<std::int8_t>(r);
            if (options_.propagate && !propagate(child, {depth})) {
                ++stats.propagation_prunes;
                continue;
            }
            if (check && !lp_feasible(child, stats)) {
                ++stats.lp_prunes;
                continue;
            }
            if (visit(child)) return true;
        }
        return false;
    }

    std::optional<Representation> dfs(int depth, const Domains& d, SearchStats& stats, const std::atomic<long>* best,
                                      long task) const {
        if (best != nullptr && best->load(std::memory_order_relaxed) < task) return std::nullopt;
        if (depth == static_cast<int>(order_.size())) return leaf(d, stats);
        std::optional<Representation> found;
        expand(depth, d, stats, [&](const Domains& child) {
            found = dfs(depth + 1, child, stats, best, task);
            return found.has_value();
        });
        return found;
    }

    std::optional<Representation> run_parallel(Domains root, SearchStats& stats) {
        struct Task {
            int depth;
            Domains domains;
        };
        // Breadth-first split in branch order until there is enough work.
        std::vector<Task> tasks{{0, std::move(root)}};
        const std::size_t want = static_cast<std::size_t>(options_.jobs) * 8;
        while (tasks.size() < want) {
            std::vector<Task> next;
            bool grew = false;
            for (auto& t : tasks) {
                if (t.depth == static_cast<int>(order_.size())) {
                    next.push_back(std::move(t));
                    continue;
                }
                grew = true;
                expand(t.depth, t.domains, stats, [&](const Domains& child) {
                    next.push_back({t.depth + 1, child});
                    return false;
                });
            }
            tasks = std::move(next);
            if (!grew) break;
        }

        std::vector<std::optional<Representation>> results(tasks.size());
        std::vector<SearchStats> local(static_cast<std::size_t>(options_.jobs));
        std::atomic<long> best{static_cast<long>(tasks.size())};
        std::atomic<std::size_t> cursor{0};
        auto worker = [&](std::size_t w) {
            for (;;) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= tasks.size() || static_cast<long>(i) > best.load()) return;
                results[i] = dfs(tasks[i].depth, tasks[i].domains, local[w], &best, static_cast<long>(i));
                if (results[i]) {
                    long cur = best.load();
                    while (static_cast<long>(i) < cur && !best.compare_exchange_weak(cur, static_cast<long>(i))) {
                    }
                }
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < options_.jobs; ++w) pool.emplace_back(worker, static_cast<std::size_t>(w));
        for (auto& th : pool) th.join();
        for (const auto& s : local) {
            stats.nodes += s.nodes;
            stats.lp_calls += s.lp_calls;
            stats.propagation_prunes += s.propagation_prunes;
            stats.lp_prunes += s.lp_prunes;
        }
        const long winner = best.load();
        if (winner < static_cast<long>(tasks.size())) return results[static_cast<std::size_t>(winner)];
        return std::nullopt;
    }

    const Graph& graph_;
    int k_;
    int n_;
    SearchOptions options_;
    std::vector<VertexPair> order_;
    std::vector<int> position_;
    std::vector<bool> is_edge_;
    int first_nonedge_ = -1;
    std::vector<Exchange> exchanges_;
    std::vector<std::vector<int>> touching_;
};

} // namespace

LinearSystem system_for_assignment(const Graph& g, const RegionAssignment& asg) {
    if (asg.k < 1) throw std::invalid_argument("assignment needs k >= 1");
    LinearSystem sys = threshold_chain(g.order(), asg.k);
    for (const auto& [pair, region] : asg.region) {
        if (pair.u < 0 || pair.v >= g.order() || pair.u == pair.v) {
            throw std::invalid_argument("pair " + std::to_string(pair.u) + "-" + std::to_string(pair.v) +
                                        " is not a vertex pair of the graph");
        }
        if (region < 0 || region > asg.k) {
            throw std::invalid_argument("region " + std::to_string(region) + " outside [0, " + std::to_string(asg.k) +
                                        "]");
        }
        if ((region % 2 == 1) != g.adjacent(pair.u, pair.v)) {
            throw std::invalid_argument("pair " + std::to_string(pair.u) + "-" + std::to_string(pair.v) +
                                        " has region " + std::to_string(region) + " of the wrong parity");
        }
        add_pair_bounds(sys, asg.k, pair, region, region);
    }
    return sys;
}

std::optional<Representation> is_k_threshold(const Graph& g, int k, const SearchOptions& options, SearchStats* stats) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    SearchStats scratch;
    SearchStats& s = stats != nullptr ? *stats : scratch;
    RegionSearch search(g, k, options);
    if (k == 1) return search.solve_forced(s);
    return search.run(s);
}

ThresholdNumberResult threshold_number(const Graph& g, int k_max, const SearchOptions& options, SearchStats* stats) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    ThresholdNumberResult result;
    result.k_max = k_max;
    for (int k = 1; k <= k_max; ++k) {
        if (auto rep = is_k_threshold(g, k, options, stats)) {
            result.value = k;
            result.witness = std::move(rep);
            return result;
        }
    }
    return result;
}

} // namespace mtg
