#pragma once

#include <string>
#include <string_view>

#include "dioph/graph.hpp"

namespace dioph {

/// Parse failure with the offending 1-based line number.
struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what);
    int line;
};

/// Edge-list format: header "p <n>", one "u v" edge per line, 1-indexed,
/// '#' comments and blank lines allowed, whitespace-tolerant. Loops,
/// duplicate edges and out-of-range endpoints are hard errors.
SimpleGraph parse_edge_list(std::string_view text);

/// Canonical form: "p <n>\n" then edges "u v\n" (u < v) sorted
/// lexicographically, LF line endings, single spaces.
std::string emit_edge_list(const SimpleGraph& graph);

/// GraphViz output. When a labelling is supplied, vertices are named by
/// their labels.
std::string emit_dot(const SimpleGraph& graph, const Labelling* labelling = nullptr);

/// Named constructions: path, cycle, star, wheel, complete (parameter =
/// vertex count), petersen (no parameter), maximal_diophantine(n),
/// maximal_prime(n).
SimpleGraph generate(std::string_view name, int parameter = 0);

}  // namespace dioph
