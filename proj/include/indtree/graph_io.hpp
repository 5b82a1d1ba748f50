#ifndef INDTREE_GRAPH_IO_HPP
#define INDTREE_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "indtree/graph.hpp"

namespace indtree {

// Edge-list text format:
//   - one edge per line: two nonnegative integers separated by whitespace
//   - "v <id>" declares an isolated vertex
//   - blank lines and lines starting with '#' are ignored
// Rejects self-loops, duplicate edges and malformed lines (ParseError with
// the 1-based line number).
Graph parse_edge_list(std::string_view text);

// Edges as "u v" lines (u < v, ascending), then "v <id>" lines for isolated
// vertices. parse_edge_list round-trips the output exactly.
std::string emit_edge_list(const Graph& g);

// graph6 format per the published specification: N(n) header, then the upper
// triangle of the adjacency matrix column by column, packed big-endian six
// bits per printable character offset by 63.
Graph parse_graph6(std::string_view text);

// Vertices are relabeled to 0..n-1 in ascending label order before encoding,
// so parse_graph6(emit_graph6(g)) equals g up to that relabeling.
std::string emit_graph6(const Graph& g);

enum class GraphFormat { edgelist, graph6 };

// First content line parsing as two integers (or as "v <id>") means edgelist;
// anything else is taken as graph6.
GraphFormat detect_format(std::string_view text);

} // namespace indtree

#endif
