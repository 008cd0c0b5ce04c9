#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "mtg/graph.hpp"

namespace mtg {

/// Malformed input text. `line()` is 1-based, or 0 when not line-oriented.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    [[nodiscard]] int line() const { return line_; }

private:
    int line_;
};

/// Edge-list text: header "n m", then m lines "u v". '#' starts a comment,
/// blank lines are skipped. Duplicate edges collapse.
Graph graph_from_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// One graph6 line (optional ">>graph6<<" prefix and trailing newline).
Graph graph_from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

} // namespace mtg
