#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "densepm/graphs.hpp"

namespace densepm {

using Graph = std::variant<BipartiteMultigraph, SimpleGraph>;

// Line-oriented text format:
//
//   # comment
//   bipartite <n_left> <n_right>     |  general <n>
//   e <u> <v> [mult]
//
// Indices are 0-based; for bipartite graphs u is a left and v a right vertex.
// Multiplicities default to 1 and repeated edge lines accumulate. General graphs
// reject loops and multiplicities above 1.

/// Throws ParseError carrying the offending line number.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

/// Canonical text form, accepted back by parse_graph.
std::string serialize(const BipartiteMultigraph& g);
std::string serialize(const SimpleGraph& g);
std::string serialize(const Graph& g);

}  // namespace densepm
