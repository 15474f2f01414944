#pragma once

#include <iosfwd>
#include <string>

#include "fallgraph/coloring.hpp"
#include "fallgraph/graph.hpp"

namespace fallgraph {

/// Edge-list text format: optional '#' comment lines, a data line "n m",
/// then m lines "u v" with 0 <= u < v < n. Serialization emits edges sorted
/// lexicographically.
std::string serialize_graph(const Graph& g);
Graph parse_graph(std::istream& in);
Graph parse_graph_text(const std::string& text);

/// Coloring text format: optional '#' comment lines, a data line "n k", then
/// n lines "v c" in vertex order, with c a color or "-" for uncolored.
std::string serialize_coloring(const Coloring& c);
Coloring parse_coloring(std::istream& in);
Coloring parse_coloring_text(const std::string& text);

} // namespace fallgraph
