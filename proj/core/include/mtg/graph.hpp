#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace mtg {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct VertexPair {
    Vertex u = 0;
    Vertex v = 0;

    VertexPair() = default;
    VertexPair(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const VertexPair&, const VertexPair&) = default;
    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    /// Edgeless graph. Throws std::invalid_argument if n < 1.
    explicit Graph(int n);
    /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
    /// Repeated edges are accepted and collapse to one.
    Graph(int n, std::span<const VertexPair> edges);

    [[nodiscard]] int order() const { return n_; }
    [[nodiscard]] int edge_count() const { return edge_count_; }
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
        return adj_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] != 0;
    }
    [[nodiscard]] int degree(Vertex v) const;

    /// Edges in lexicographic order.
    [[nodiscard]] std::vector<VertexPair> edges() const;
    /// All unordered pairs in lexicographic order.
    [[nodiscard]] std::vector<VertexPair> pairs() const;

    /// Copy with the adjacency of {u, v} flipped.
    [[nodiscard]] Graph with_toggled(Vertex u, Vertex v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(Vertex v) const;

    int n_;
    int edge_count_ = 0;
    std::vector<std::uint8_t> adj_;
};

/// C_n on 0..n-1 with edges {i, i+1 mod n}. Throws if n < 3.
Graph cycle_graph(int n);
/// P_n with edges {i, i+1}. Throws if n < 1.
Graph path_graph(int n);
Graph complete_graph(int n);

/// Graph on n vertices whose edges are the set bits of `mask`, bit b being
/// the b-th pair of Graph::pairs() order. Used to enumerate labeled graphs.
Graph graph_from_pair_mask(int n, std::uint64_t mask);

} // namespace mtg
