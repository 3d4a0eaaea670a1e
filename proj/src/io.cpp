#include "edim/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace edim {

namespace {

bool skippable(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;  // blank
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n >> m) || n < 0 || m < 0)
        throw Error(Errc::parse_error,
                    "edge list line " + std::to_string(line_no) + ": expected header \"n m\"");
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    long long u, v;
    if (!(fields >> u >> v))
      throw Error(Errc::parse_error,
                  "edge list line " + std::to_string(line_no) + ": expected \"u v\"");
    if (static_cast<long long>(edges.size()) == m)
      throw Error(Errc::parse_error, "edge list line " + std::to_string(line_no) +
                                         ": more than the declared " + std::to_string(m) +
                                         " edges");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw Error(Errc::parse_error, "edge list: missing \"n m\" header");
  if (static_cast<long long>(edges.size()) != m)
    throw Error(Errc::parse_error, "edge list: declared " + std::to_string(m) +
                                       " edges but found " + std::to_string(edges.size()));
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, std::string_view comment) {
  if (!comment.empty()) out << "# " << comment << "\n";
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_edge_list_file(const std::filesystem::path& path, const Graph& g,
                          std::string_view comment) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::io_error, "cannot open " + path.string() + " for writing");
  write_edge_list(out, g, comment);
  if (!out) throw Error(Errc::io_error, "failed writing " + path.string());
}

void write_labels_file(const std::filesystem::path& path,
                       const std::vector<std::string>& labels) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (std::size_t id = 0; id < labels.size(); ++id) obj[std::to_string(id)] = labels[id];
  std::ofstream out(path);
  if (!out) throw Error(Errc::io_error, "cannot open " + path.string() + " for writing");
  out << obj.dump(2) << "\n";
  if (!out) throw Error(Errc::io_error, "failed writing " + path.string());
}

std::optional<std::vector<std::string>> read_labels_file(const std::filesystem::path& path,
                                                         int vertex_count) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json obj;
  try {
    in >> obj;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, "label map " + path.string() + ": " + e.what());
  }
  if (!obj.is_object())
    throw Error(Errc::parse_error, "label map " + path.string() + ": expected a JSON object");
  std::vector<std::string> labels(vertex_count);
  std::vector<char> seen(vertex_count, 0);
  for (auto& [key, value] : obj.items()) {
    int id;
    try {
      id = std::stoi(key);
    } catch (...) {
      throw Error(Errc::parse_error, "label map " + path.string() + ": bad id \"" + key + "\"");
    }
    if (id < 0 || id >= vertex_count || !value.is_string())
      throw Error(Errc::parse_error, "label map " + path.string() + ": bad entry \"" + key + "\"");
    labels[id] = value.get<std::string>();
    seen[id] = 1;
  }
  for (int v = 0; v < vertex_count; ++v)
    if (!seen[v])
      throw Error(Errc::parse_error,
                  "label map " + path.string() + ": missing id " + std::to_string(v));
  return labels;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io_error, "cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw Error(Errc::io_error, "failed writing " + path.string());
}

}  // namespace edim
