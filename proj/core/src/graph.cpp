#include "mtg/graph.hpp"

#include <stdexcept>
#include <string>

namespace mtg {

Graph::Graph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex, got " + std::to_string(n));
    adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const VertexPair> edges) : Graph(n) {
    for (const auto& e : edges) {
        check_vertex(e.u);
        check_vertex(e.v);
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        auto& uv = adj_[static_cast<std::size_t>(e.u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(e.v)];
        if (uv == 0) ++edge_count_;
        uv = 1;
        adj_[static_cast<std::size_t>(e.v) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(e.u)] = 1;
    }
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n_) + ")");
    }
}

int Graph::degree(Vertex v) const {
    check_vertex(v);
    int d = 0;
    for (Vertex w = 0; w < n_; ++w) d += adjacent(v, w) ? 1 : 0;
    return d;
}

std::vector<VertexPair> Graph::edges() const {
    std::vector<VertexPair> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v = u + 1; v < n_; ++v) {
            if (adjacent(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<VertexPair> Graph::pairs() const {
    std::vector<VertexPair> out;
    out.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1) / 2);
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v = u + 1; v < n_; ++v) out.emplace_back(u, v);
    }
    return out;
}

Graph Graph::with_toggled(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("cannot toggle a self-pair");
    Graph g = *this;
    const auto uv = static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    const auto vu = static_cast<std::size_t>(v) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(u);
    g.edge_count_ += g.adj_[uv] != 0 ? -1 : 1;
    g.adj_[uv] = g.adj_[vu] = g.adj_[uv] != 0 ? 0 : 1;
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3, got " + std::to_string(n));
    std::vector<VertexPair> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1, got " + std::to_string(n));
    std::vector<VertexPair> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    Graph g(n);
    return Graph(n, g.pairs());
}

Graph graph_from_pair_mask(int n, std::uint64_t mask) {
    const Graph empty(n);
    const auto all = empty.pairs();
    if (all.size() > 64) throw std::invalid_argument("pair mask supports at most 64 pairs");
    std::vector<VertexPair> edges;
    for (std::size_t b = 0; b < all.size(); ++b) {
        if (((mask >> b) & 1U) != 0) edges.push_back(all[b]);
    }
    return Graph(n, edges);
}

} // namespace mtg
