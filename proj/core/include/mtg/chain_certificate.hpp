#pragma once

#include <array>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mtg/graph.hpp"

namespace mtg {

/// With two thresholds the line reads NO | YES | NO; a nonedge sum lies in
/// the smaller or the larger NO region.
enum class NoRegion { smaller, larger };

/// Residue class of n that selects the pairing scheme.
enum class ChainCase { odd, two_mod_four, zero_mod_four };

/// One deduction. `quad` = (a, b, c, d) with ab, cd edges and ac, bd
/// nonedges of C_n; the exchange identity forces s_ac and s_bd into
/// different NO regions.
///
/// Step 0 is the anchor: its pair is {a, c} and its label is fixed to
/// smaller (negation symmetry). Every later step i has {a, c} equal to the
/// pair of step i-1, {b, d} equal to its own pair, and the label opposite to
/// that of step i-1. Step 0 and step 1 therefore share one quadruple.
struct ChainStep {
    std::array<Vertex, 4> quad{};
    VertexPair pair;
    NoRegion label = NoRegion::smaller;

    friend bool operator==(const ChainStep&, const ChainStep&) = default;
};

/// The same pair derived with both labels.
struct LabelConflict {
    VertexPair pair;
    std::array<int, 2> steps{};
    std::array<NoRegion, 2> labels{};

    friend bool operator==(const LabelConflict&, const LabelConflict&) = default;
};

/// `quad` = (a, b, c, d) with ab and cd edges while {a, d} and {b, c} are
/// nonedges both labeled smaller by the referenced steps. Then
/// s_ab + s_cd > s_ad + s_bc although both sides are equal.
struct ExchangeContradiction {
    std::array<Vertex, 4> quad{};
    std::array<int, 2> steps{};

    friend bool operator==(const ExchangeContradiction&, const ExchangeContradiction&) = default;
};

/// Machine-checkable refutation of a two-threshold representation of C_n.
struct ChainCertificate {
    int n = 0;
    ChainCase kind = ChainCase::odd;
    std::vector<ChainStep> steps;
    std::variant<LabelConflict, ExchangeContradiction> conclusion;

    friend bool operator==(const ChainCertificate&, const ChainCertificate&) = default;
};

/// Builds the forced label chain for C_n. Pairs (0-indexed, wrapping mod n):
///   odd n:          {i, i+2}            for i = 0..n
///   n = 2 (mod 4):  {i, n/2 + i}        for i = 0..n/2
///   n = 0 (mod 4):  {i, n/2 + i - 1}    for i = 0..n/2
/// Throws std::invalid_argument if n < 5.
ChainCertificate two_threshold_refutation_chain(int n);

/// Validates a certificate from scratch against C_n. Never throws.
bool check_chain_certificate(const ChainCertificate& cert);

ChainCase chain_case_for(int n);
std::string_view to_string(ChainCase c);
std::string_view to_string(NoRegion r);

std::string to_json(const ChainCertificate& cert);
/// Throws ParseError on malformed input.
ChainCertificate chain_certificate_from_json(std::string_view text);

} // namespace mtg
