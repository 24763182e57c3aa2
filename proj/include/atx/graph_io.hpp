#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "atx/graph.hpp"

namespace atx {

enum class GraphFormat { Auto, Graph6, EdgeList };

GraphFormat parse_format(std::string_view name);

// Edge list: first token is the vertex count, then whitespace-separated "u v" pairs.
Graph parse_edgelist(std::string_view text);
std::string emit_edgelist(const Graph& g);

// Standard graph6 (optional ">>graph6<<" header, N(n) then upper-triangle bits, column-major).
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Format detection: graph6 never starts with a digit.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto);

// One graph6 string per non-empty line; ParseError offsets are line numbers.
std::vector<Graph> read_graph6_stream(std::istream& in);

std::string graph_to_dot(const Graph& g, std::string_view name = "G");

} // namespace atx
