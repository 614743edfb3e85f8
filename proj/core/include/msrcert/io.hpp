#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "msrcert/graph.hpp"

namespace msrcert {

/// Edge-list text format: first line "n m", then m lines "u v" with
/// 0-based integers. Blank lines and '#' comments are ignored.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Canonical JSON format: {"n": int, "edges": [[u,v],...]} with u < v,
/// sorted lexicographically.
Graph parse_graph_json(std::string_view text);
std::string to_canonical_json(const Graph& g);

/// Auto-detects between the two formats by the first non-space byte.
Graph parse_graph(std::string_view text);

Graph load_graph(const std::filesystem::path& file);
std::string read_file(const std::filesystem::path& file);
void write_file(const std::filesystem::path& file, std::string_view content);

} // namespace msrcert
