#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "cycleforge/graph.hpp"

namespace cycleforge {

// graph6: size prefix followed by the upper triangle of the adjacency matrix
// in column order, packed six bits per byte, offset by 63. An optional
// ">>graph6<<" header and trailing whitespace are accepted on read.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// Edge-list text: "n m" on the first line then m lines "a b" (0-based).
// Lines starting with '#' and blank lines are ignored on read.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

enum class GraphFormat { Graph6, EdgeList };

// Picks the format from the first meaningful line: two integers mean edge list.
GraphFormat sniff_format(std::string_view text);
Graph parse_graph(std::string_view text);

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g, GraphFormat format);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

}  // namespace cycleforge
