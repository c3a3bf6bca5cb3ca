#pragma once

#include <string>
#include <string_view>

#include "packlab/graph.hpp"

namespace packlab {

enum class GraphFormat { EdgeList, Graph6 };

/// Edge-list text: `#` comment lines, a header `n m`, then m lines `u v`.
Graph parse_edge_list(std::string_view text);
/// Canonical form: header, then edges u < v in lexicographic order.
std::string format_edge_list(const Graph& g);

/// Standard graph6 (no `>>graph6<<` header); trailing newline is accepted.
Graph parse_graph6(std::string_view text);
std::string format_graph6(const Graph& g);

Graph decode_graph(std::string_view text, GraphFormat format);
std::string encode_graph(const Graph& g, GraphFormat format);

/// `.g6` → Graph6, everything else → EdgeList.
GraphFormat format_from_path(std::string_view path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace packlab
