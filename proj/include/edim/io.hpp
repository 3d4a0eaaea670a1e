#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edim/graph.hpp"

namespace edim {

/// Edge-list text format: a "n m" header line followed by m "u v" lines with
/// 0-indexed endpoints. Lines starting with '#' and blank lines are skipped.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g, std::string_view comment = {});
void write_edge_list_file(const std::filesystem::path& path, const Graph& g,
                          std::string_view comment = {});

/// Vertex label maps are JSON objects {"<id>": "<label>"}; the conventional
/// location is the edge-list path plus a ".labels" suffix.
void write_labels_file(const std::filesystem::path& path,
                       const std::vector<std::string>& labels);
std::optional<std::vector<std::string>> read_labels_file(const std::filesystem::path& path,
                                                         int vertex_count);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace edim
