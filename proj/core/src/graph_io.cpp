#include "mtg/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <vector>

namespace mtg {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

long long to_int(std::string_view tok, int line) {
    long long value = 0;
    const auto* end = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc{} || ptr != end) throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

constexpr int kGraph6Offset = 63;
constexpr std::size_t kMaxGraph6Order = std::size_t{1} << 18;

} // namespace

Graph graph_from_edge_list(std::string_view text) {
    long long n = -1;
    long long m = -1;
    int header_line = 0;
    std::vector<VertexPair> edges;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks.size() != 2)
            throw ParseError(line_no, "expected two integers, got " + std::to_string(toks.size()) + " fields");
        const long long a = to_int(toks[0], line_no);
        const long long b = to_int(toks[1], line_no);
        if (n < 0) {
            if (a < 1) throw ParseError(line_no, "vertex count must be >= 1");
            if (b < 0) throw ParseError(line_no, "edge count must be >= 0");
            n = a;
            m = b;
            header_line = line_no;
            continue;
        }
        if (a < 0 || a >= n || b < 0 || b >= n) {
            throw ParseError(line_no, "vertex index out of range [0, " + std::to_string(n) + ")");
        }
        if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
        if (static_cast<long long>(edges.size()) == m) {
            throw ParseError(line_no, "more edge lines than the " + std::to_string(m) + " declared");
        }
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (n < 0) throw ParseError(1, "missing 'n m' header");
    if (static_cast<long long>(edges.size()) != m) {
        throw ParseError(header_line,
                         "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    }
    return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
    const auto edges = g.edges();
    std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
    for (const auto& e : edges) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

Graph graph_from_graph6(std::string_view text) {
    std::string_view s = text;
    if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw ParseError(0, "graph6: empty input");
    for (char c : s) {
        if (c < kGraph6Offset || c > 126) throw ParseError(0, "graph6: byte out of range");
    }

    auto sextet = [&](std::size_t i) { return static_cast<std::uint32_t>(s[i] - kGraph6Offset); };
    std::size_t n = 0;
    std::size_t pos = 0;
    if (s[0] != 126) {
        n = sextet(0);
        pos = 1;
    } else if (s.size() >= 2 && s[1] != 126) {
        if (s.size() < 4) throw ParseError(0, "graph6: truncated size field");
        n = (sextet(1) << 12) | (sextet(2) << 6) | sextet(3);
        pos = 4;
    } else {
        if (s.size() < 8) throw ParseError(0, "graph6: truncated size field");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(i);
        pos = 8;
    }
    if (n < 1) throw ParseError(0, "graph6: graph must have at least one vertex");
    if (n > kMaxGraph6Order) throw ParseError(0, "graph6: order " + std::to_string(n) + " exceeds 2^18");

    const std::size_t bits = n * (n - 1) / 2;
    const std::size_t expected = (bits + 5) / 6;
    if (s.size() - pos != expected) {
        throw ParseError(0, "graph6: expected " + std::to_string(expected) + " data bytes for n=" + std::to_string(n) +
                                ", got " + std::to_string(s.size() - pos));
    }

    // Upper triangle, column-major: x(0,1), x(0,2), x(1,2), x(0,3), ...
    std::vector<VertexPair> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const std::uint32_t chunk = sextet(pos + k / 6);
            if (((chunk >> (5 - k % 6)) & 1U) != 0) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    return Graph(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kGraph6Offset));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63U) + kGraph6Offset));
    } else {
        out.append(2, static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63U) + kGraph6Offset));
    }
    std::uint32_t chunk = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kGraph6Offset));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kGraph6Offset));
    return out;
}

} // namespace mtg
