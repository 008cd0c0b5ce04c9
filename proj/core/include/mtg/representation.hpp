#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mtg/graph.hpp"
#include "mtg/rational.hpp"

namespace mtg {

/// Rank per vertex plus strictly increasing thresholds t_1 < ... < t_k.
/// A pair {u, v} is an edge of the represented graph iff an odd number of
/// thresholds satisfy t_i <= rank(u) + rank(v).
class Representation {
public:
    /// Throws std::invalid_argument if ranks is empty, thresholds is empty, or
    /// thresholds are not strictly increasing.
    Representation(std::vector<Rational> ranks, std::vector<Rational> thresholds);

    [[nodiscard]] int order() const { return static_cast<int>(ranks_.size()); }
    [[nodiscard]] int threshold_count() const { return static_cast<int>(thresholds_.size()); }
    [[nodiscard]] std::span<const Rational> ranks() const { return ranks_; }
    [[nodiscard]] std::span<const Rational> thresholds() const { return thresholds_; }
    [[nodiscard]] const Rational& rank(Vertex v) const { return ranks_.at(static_cast<std::size_t>(v)); }
    [[nodiscard]] Rational pair_sum(Vertex u, Vertex v) const { return rank(u) + rank(v); }

    friend bool operator==(const Representation&, const Representation&) = default;

private:
    std::vector<Rational> ranks_;
    std::vector<Rational> thresholds_;
};

/// Number of thresholds t_i with t_i <= sum. Region j is [t_j, t_{j+1}), so a
/// sum sitting exactly on t_j belongs to region j. Throws
/// std::invalid_argument if thresholds are not strictly increasing.
int region_index(const Rational& sum, std::span<const Rational> thresholds);

struct Violation {
    VertexPair pair;
    Rational sum;
    int region = 0;
    bool expected_odd = false; ///< true when the pair is an edge
};

struct VerifyReport {
    bool ok = true;
    std::vector<Violation> violations; ///< lexicographic pair order
};

/// Checks every pair of `g` against `rep`. Throws std::invalid_argument on a
/// vertex-count mismatch.
VerifyReport verify(const Graph& g, const Representation& rep);

/// The graph that `rep` represents.
Graph induced_graph(const Representation& rep);

/// JSON: {"n": int, "ranks": [string...], "thresholds": [string...]}.
/// Output strings are canonical "p/q"; input also accepts decimals.
std::string to_json(const Representation& rep);
/// Throws ParseError on malformed JSON or fields and std::invalid_argument
/// when the values break a Representation invariant.
Representation representation_from_json(std::string_view text);

} // namespace mtg
