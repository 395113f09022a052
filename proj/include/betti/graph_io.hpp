#pragma once

#include <betti/graph.hpp>

#include <string>
#include <string_view>

namespace betti {

// Edge-list text format:
//
//   # comment
//   n 4
//   1 2
//   2 3
//
// The first non-comment line is "n <count>", followed by one "u v" pair per
// line with 1-indexed labels. '#' starts a comment anywhere on a line.

Graph parse_edge_list(std::string_view text, int max_vertices = Limits{}.max_graph_vertices);
Graph read_edge_list_file(const std::string& path, int max_vertices = Limits{}.max_graph_vertices);

/// Canonical form: "n <count>" followed by the sorted edges, one per line.
std::string format_edge_list(const Graph& g);

// graph6, restricted to the single-byte size header (n <= 62).
Graph parse_graph6(std::string_view text, int max_vertices = Limits{}.max_graph_vertices);
std::string to_graph6(const Graph& g);

}  // namespace betti
