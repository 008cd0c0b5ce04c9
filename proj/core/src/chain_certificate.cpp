#include "mtg/chain_certificate.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "mtg/graph_io.hpp"

namespace mtg {

namespace {

NoRegion flip(NoRegion r) { return r == NoRegion::smaller ? NoRegion::larger : NoRegion::smaller; }

/// Adjacency in C_n without materializing the graph.
class CycleView {
public:
    explicit CycleView(int n) : n_(n) {}

    [[nodiscard]] bool vertex(Vertex v) const { return v >= 0 && v < n_; }
    [[nodiscard]] bool edge(Vertex u, Vertex v) const {
        if (!vertex(u) || !vertex(v) || u == v) return false;
        const int diff = (u - v + n_) % n_;
        return diff == 1 || diff == n_ - 1;
    }
    [[nodiscard]] bool nonedge(Vertex u, Vertex v) const { return vertex(u) && vertex(v) && u != v && !edge(u, v); }
    [[nodiscard]] Vertex wrap(int i) const { return ((i % n_) + n_) % n_; }

    /// ab, cd edges; ac, bd nonedges; all four distinct.
    [[nodiscard]] bool alternating(const std::array<Vertex, 4>& q) const {
        const auto [a, b, c, d] = q;
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                if (q[static_cast<std::size_t>(i)] == q[static_cast<std::size_t>(j)]) return false;
            }
        }
        return edge(a, b) && edge(c, d) && nonedge(a, c) && nonedge(b, d);
    }

private:
    int n_;
};

bool valid_pair(const CycleView& cycle, const VertexPair& p) { return cycle.nonedge(p.u, p.v); }

bool check_steps(const CycleView& cycle, const std::vector<ChainStep>& steps) {
    if (steps.size() < 2) return false;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& s = steps[i];
        if (!cycle.alternating(s.quad) || !valid_pair(cycle, s.pair)) return false;
        const auto [a, b, c, d] = s.quad;
        const VertexPair ac(a, c);
        const VertexPair bd(b, d);
        if (i == 0) {
            // Anchor: the WLOG choice, justified by the same split as step 1.
            if (s.label != NoRegion::smaller || s.pair != ac || steps[1].pair != bd) return false;
        } else {
            const auto& prev = steps[i - 1];
            if (prev.pair != ac || s.pair != bd || s.label != flip(prev.label)) return false;
        }
    }
    return true;
}

bool check_conclusion(const CycleView& cycle, const std::vector<ChainStep>& steps, const LabelConflict& c) {
    const auto count = static_cast<int>(steps.size());
    const auto [i, j] = c.steps;
    if (i < 0 || j < 0 || i >= count || j >= count || i == j) return false;
    const auto& si = steps[static_cast<std::size_t>(i)];
    const auto& sj = steps[static_cast<std::size_t>(j)];
    if (!valid_pair(cycle, c.pair) || si.pair != c.pair || sj.pair != c.pair) return false;
    return c.labels[0] == si.label && c.labels[1] == sj.label && c.labels[0] != c.labels[1];
}

bool check_conclusion(const CycleView& cycle, const std::vector<ChainStep>& steps, const ExchangeContradiction& c) {
    const auto count = static_cast<int>(steps.size());
    const auto [i, j] = c.steps;
    if (i < 0 || j < 0 || i >= count || j >= count || i == j) return false;
    const auto [a, b, x, d] = c.quad;
    const std::array<Vertex, 4> as_alternating{a, b, d, x}; // ab, dx edges; ad, bx nonedges
    if (!cycle.alternating(as_alternating)) return false;
    const auto& si = steps[static_cast<std::size_t>(i)];
    const auto& sj = steps[static_cast<std::size_t>(j)];
    if (si.pair != VertexPair(a, d) || sj.pair != VertexPair(b, x)) return false;
    return si.label == NoRegion::smaller && sj.label == NoRegion::smaller;
}

NoRegion no_region_from(const std::string& s) {
    if (s == "smallerNO") return NoRegion::smaller;
    if (s == "largerNO") return NoRegion::larger;
    throw ParseError(0, "certificate JSON: unknown label '" + s + "'");
}

ChainCase case_from(const std::string& s) {
    if (s == "odd") return ChainCase::odd;
    if (s == "twoModFour") return ChainCase::two_mod_four;
    if (s == "zeroModFour") return ChainCase::zero_mod_four;
    throw ParseError(0, "certificate JSON: unknown case '" + s + "'");
}

} // namespace

ChainCase chain_case_for(int n) {
    if (n % 2 == 1) return ChainCase::odd;
    return n % 4 == 2 ? ChainCase::two_mod_four : ChainCase::zero_mod_four;
}

std::string_view to_string(ChainCase c) {
    switch (c) {
    case ChainCase::odd: return "odd";
    case ChainCase::two_mod_four: return "twoModFour";
    case ChainCase::zero_mod_four: return "zeroModFour";
    }
    return "?";
}

std::string_view to_string(NoRegion r) { return r == NoRegion::smaller ? "smallerNO" : "largerNO"; }

ChainCertificate two_threshold_refutation_chain(int n) {
    if (n < 5) throw std::invalid_argument("refutation chain needs n >= 5, got " + std::to_string(n));
    const CycleView cycle(n);
    ChainCertificate cert;
    cert.n = n;
    cert.kind = chain_case_for(n);

    // Step j pairs vertex j with vertex j + offset; quadruples advance by one
    // along both sides of the pairing.
    const int half = n / 2;
    int offset = 2;
    int last = n;
    if (cert.kind == ChainCase::two_mod_four) {
        offset = half;
        last = half;
    } else if (cert.kind == ChainCase::zero_mod_four) {
        offset = half - 1;
        last = half;
    }
    auto pair_at = [&](int j) { return VertexPair(cycle.wrap(j), cycle.wrap(j + offset)); };
    auto quad_into = [&](int j) {
        return std::array<Vertex, 4>{cycle.wrap(j - 1), cycle.wrap(j), cycle.wrap(j + offset - 1),
                                     cycle.wrap(j + offset)};
    };
    for (int j = 0; j <= last; ++j) {
        ChainStep step;
        step.quad = quad_into(j == 0 ? 1 : j);
        step.pair = pair_at(j);
        step.label = j % 2 == 0 ? NoRegion::smaller : NoRegion::larger;
        cert.steps.push_back(step);
    }

    if (cert.kind == ChainCase::zero_mod_four) {
        // (v_{n/2}, v_{n/2+1}, v_n, v_1) in 1-based cycle labels.
        cert.conclusion = ExchangeContradiction{{half - 1, half, n - 1, 0}, {0, last}};
    } else {
        cert.conclusion =
            LabelConflict{cert.steps.front().pair, {0, last}, {cert.steps.front().label, cert.steps.back().label}};
    }
    return cert;
}

bool check_chain_certificate(const ChainCertificate& cert) {
    if (cert.n < 5 || cert.kind != chain_case_for(cert.n)) return false;
    const CycleView cycle(cert.n);
    if (!check_steps(cycle, cert.steps)) return false;
    return std::visit([&](const auto& c) { return check_conclusion(cycle, cert.steps, c); }, cert.conclusion);
}

std::string to_json(const ChainCertificate& cert) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["n"] = cert.n;
    j["case"] = std::string(to_string(cert.kind));
    auto& steps = j["steps"] = ordered_json::array();
    for (const auto& s : cert.steps) {
        ordered_json step;
        step["quad"] = s.quad;
        step["pair"] = {s.pair.u, s.pair.v};
        step["label"] = std::string(to_string(s.label));
        steps.push_back(std::move(step));
    }
    ordered_json conclusion;
    if (const auto* c = std::get_if<LabelConflict>(&cert.conclusion)) {
        conclusion["kind"] = "conflict";
        conclusion["pair"] = {c->pair.u, c->pair.v};
        conclusion["steps"] = c->steps;
        conclusion["labels"] = {std::string(to_string(c->labels[0])), std::string(to_string(c->labels[1]))};
    } else {
        const auto& e = std::get<ExchangeContradiction>(cert.conclusion);
        conclusion["kind"] = "exchange";
        conclusion["quad"] = e.quad;
        conclusion["steps"] = e.steps;
    }
    j["conclusion"] = std::move(conclusion);
    return j.dump(2) + "\n";
}

ChainCertificate chain_certificate_from_json(std::string_view text) {
    try {
        const auto j = nlohmann::json::parse(text);
        ChainCertificate cert;
        cert.n = j.at("n").get<int>();
        cert.kind = case_from(j.at("case").get<std::string>());
        auto read_pair = [](const nlohmann::json& p) {
            const auto v = p.get<std::array<int, 2>>();
            return VertexPair(v[0], v[1]);
        };
        for (const auto& s : j.at("steps")) {
            ChainStep step;
            step.quad = s.at("quad").get<std::array<int, 4>>();
            step.pair = read_pair(s.at("pair"));
            step.label = no_region_from(s.at("label").get<std::string>());
            cert.steps.push_back(step);
        }
        const auto& c = j.at("conclusion");
        const auto kind = c.at("kind").get<std::string>();
        if (kind == "conflict") {
            const auto labels = c.at("labels").get<std::array<std::string, 2>>();
            cert.conclusion = LabelConflict{read_pair(c.at("pair")),
                                            c.at("steps").get<std::array<int, 2>>(),
                                            {no_region_from(labels[0]), no_region_from(labels[1])}};
        } else if (kind == "exchange") {
            cert.conclusion =
                ExchangeContradiction{c.at("quad").get<std::array<int, 4>>(), c.at("steps").get<std::array<int, 2>>()};
        } else {
            throw ParseError(0, "certificate JSON: unknown conclusion kind '" + kind + "'");
        }
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("certificate JSON: ") + e.what());
    }
}

} // namespace mtg
