#include "mtg/representation.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include <gmpxx.h>

#include <nlohmann/json.hpp>

#include "mtg/graph_io.hpp"

namespace mtg {

namespace {

void require_increasing(std::span<const Rational> thresholds) {
    for (std::size_t i = 1; i < thresholds.size(); ++i) {
        if (!(thresholds[i - 1] < thresholds[i])) {
            throw std::invalid_argument("thresholds must be strictly increasing: t" + std::to_string(i) + " = " +
                                        thresholds[i - 1].to_string() + ", t" + std::to_string(i + 1) + " = " +
                                        thresholds[i].to_string());
        }
    }
}

int region_unchecked(const Rational& sum, std::span<const Rational> thresholds) {
    return static_cast<int>(std::upper_bound(thresholds.begin(), thresholds.end(), sum) - thresholds.begin());
}

// Region lookup for every pair of one representation. When all values share
// a denominator small enough, sums are compared as scaled int64 integers;
// otherwise it falls back to rational arithmetic. Both paths are exact.
class PairRegions {
public:
    explicit PairRegions(const Representation& rep) : rep_(rep) {
        constexpr std::int64_t limit = std::int64_t{1} << 61;
        mpz_class lcm = 1;
        auto widen = [&](const Rational& x) { mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.raw().get_den_mpz_t()); };
        for (const auto& r : rep.ranks()) widen(r);
        for (const auto& t : rep.thresholds()) widen(t);
        if (lcm >= limit) return;

        auto scale = [&](const Rational& x, std::vector<std::int64_t>& out) {
            const mpz_class v = x.raw().get_num() * (lcm / x.raw().get_den());
            if (abs(v) >= limit) return false;
            out.push_back(v.get_si());
            return true;
        };
        for (const auto& r : rep.ranks()) {
            if (!scale(r, ranks_)) return;
        }
        for (const auto& t : rep.thresholds()) {
            if (!scale(t, thresholds_)) return;
        }
        scaled_ = true;
    }

    [[nodiscard]] int operator()(Vertex u, Vertex v) const {
        if (!scaled_) return region_unchecked(rep_.pair_sum(u, v), rep_.thresholds());
        const std::int64_t sum = ranks_[static_cast<std::size_t>(u)] + ranks_[static_cast<std::size_t>(v)];
        return static_cast<int>(std::upper_bound(thresholds_.begin(), thresholds_.end(), sum) - thresholds_.begin());
    }

private:
    const Representation& rep_;
    std::vector<std::int64_t> ranks_;
    std::vector<std::int64_t> thresholds_;
    bool scaled_ = false;
};

} // namespace

Representation::Representation(std::vector<Rational> ranks, std::vector<Rational> thresholds)
    : ranks_(std::move(ranks)), thresholds_(std::move(thresholds)) {
    if (ranks_.empty()) throw std::invalid_argument("representation needs at least one vertex");
    if (thresholds_.empty()) throw std::invalid_argument("representation needs at least one threshold");
    require_increasing(thresholds_);
}

int region_index(const Rational& sum, std::span<const Rational> thresholds) {
    require_increasing(thresholds);
    return region_unchecked(sum, thresholds);
}

VerifyReport verify(const Graph& g, const Representation& rep) {
    if (g.order() != rep.order()) {
        throw std::invalid_argument("graph has " + std::to_string(g.order()) + " vertices but representation has " +
                                    std::to_string(rep.order()));
    }
    VerifyReport report;
    const PairRegions regions(rep);
    const int n = g.order();
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const int region = regions(u, v);
            const bool edge = g.adjacent(u, v);
            if ((region % 2 == 1) != edge)
                report.violations.push_back({VertexPair(u, v), rep.pair_sum(u, v), region, edge});
        }
    }
    report.ok = report.violations.empty();
    return report;
}

Graph induced_graph(const Representation& rep) {
    std::vector<VertexPair> edges;
    const PairRegions regions(rep);
    const int n = rep.order();
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (regions(u, v) % 2 == 1) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

std::string to_json(const Representation& rep) {
    nlohmann::ordered_json j;
    j["n"] = rep.order();
    auto& ranks = j["ranks"] = nlohmann::ordered_json::array();
    for (const auto& r : rep.ranks()) ranks.push_back(r.to_string());
    auto& thresholds = j["thresholds"] = nlohmann::ordered_json::array();
    for (const auto& t : rep.thresholds()) thresholds.push_back(t.to_string());
    return j.dump(2) + "\n";
}

Representation representation_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("representation JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError(0, "representation JSON must be an object");
    for (const char* key : {"n", "ranks", "thresholds"}) {
        if (!j.contains(key)) throw ParseError(0, std::string("representation JSON: missing \"") + key + "\"");
    }
    if (!j["n"].is_number_integer()) throw ParseError(0, "representation JSON: \"n\" must be an integer");

    auto read_list = [&](const char* key) {
        const auto& arr = j[key];
        if (!arr.is_array()) throw ParseError(0, std::string("representation JSON: \"") + key + "\" must be an array");
        std::vector<Rational> out;
        for (const auto& item : arr) {
            // Bare JSON integers are exact, so accept them too.
            if (item.is_number_integer()) {
                out.emplace_back(item.get<std::int64_t>());
            } else if (item.is_string()) {
                try {
                    out.push_back(Rational::parse(item.get<std::string>()));
                } catch (const std::exception& e) {
                    throw ParseError(0, std::string("representation JSON: \"") + key + "\": " + e.what());
                }
            } else {
                throw ParseError(0, std::string("representation JSON: \"") + key + "\" entries must be strings");
            }
        }
        return out;
    };
    auto ranks = read_list("ranks");
    auto thresholds = read_list("thresholds");
    const auto n = j["n"].get<std::int64_t>();
    if (n != static_cast<std::int64_t>(ranks.size())) {
        throw ParseError(0, "representation JSON: n = " + std::to_string(n) + " but " + std::to_string(ranks.size()) +
                                " ranks given");
    }
    return Representation(std::move(ranks), std::move(thresholds));
}

} // namespace mtg
