#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "edim/error.hpp"
#include "edim/families.hpp"
#include "edim/graph.hpp"
#include "edim/io.hpp"
#include "edim/reduction.hpp"
#include "edim/solvers.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitParameter = 1;
constexpr int kExitIo = 2;
constexpr int kExitVerifyFalse = 3;
constexpr int kExitBudget = 4;

int exit_code_for(edim::Errc code) {
  switch (code) {
    case edim::Errc::io_error:
      return kExitIo;
    case edim::Errc::budget_exceeded:
      return kExitBudget;
    default:
      return kExitParameter;
  }
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
  }
};

void print_wall(const Timer& timer) {
  std::cout << "wall: " << std::fixed << std::setprecision(1) << timer.ms()
            << " ms\n";
  std::cout.unsetf(std::ios::fixed);
}

struct LoadedGraph {
  edim::Graph graph;
  std::optional<std::vector<std::string>> labels;
  std::string path;
};

LoadedGraph load_graph(const std::string& path) {
  edim::Graph g = edim::read_edge_list_file(path);
  auto labels = edim::read_labels_file(path + ".labels", g.vertex_count());
  return LoadedGraph{std::move(g), std::move(labels), path};
}

std::string vertex_name(const LoadedGraph& in, int v) {
  if (in.labels) return (*in.labels)[static_cast<std::size_t>(v)];
  return std::to_string(v);
}

std::string joined_names(const LoadedGraph& in, std::span<const int> ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ", ";
    out += vertex_name(in, ids[i]);
  }
  return out;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) {
      out.emplace_back();
      continue;
    }
    const auto e = item.find_last_not_of(" \t");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::optional<long long> parse_int(const std::string& tok) {
  long long value = 0;
  const char* begin = tok.data();
  const char* end = begin + tok.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

/// Family grammar plus the CLI-only form "realize:r,t,n".
edim::LabeledGraph graph_from_spec_text(const std::string& text) {
  const std::string prefix = "realize:";
  if (text.rfind(prefix, 0) == 0) {
    const std::vector<std::string> parts = split_commas(text.substr(prefix.size()));
    std::vector<long long> nums;
    for (const std::string& p : parts) {
      auto v = parse_int(p);
      if (!v)
        throw edim::Error(edim::Errc::parse_error,
                          "realize expects integers, got '" + p + "'");
      nums.push_back(*v);
    }
    if (nums.size() != 3)
      throw edim::Error(edim::Errc::parse_error, "realize expects exactly r,t,n");
    for (long long v : nums)
      if (v < -1'000'000 || v > 1'000'000)
        throw edim::Error(edim::Errc::parameter_out_of_domain,
                          "realize parameter out of range");
    return edim::realization_graph(static_cast<int>(nums[0]),
                                   static_cast<int>(nums[1]),
                                   static_cast<int>(nums[2]));
  }
  return edim::make_family(edim::FamilySpec::parse(text));
}

ordered_json input_json(const LoadedGraph& in) {
  return ordered_json{{"path", in.path},
                      {"vertices", in.graph.vertex_count()},
                      {"edges", in.graph.edge_count()}};
}

ordered_json bounds_json(const edim::BoundsReport& b) {
  ordered_json j;
  j["value"] = b.value;
  j["vertices"] = b.vertex_count;
  j["diameter"] = b.diameter;
  j["max_degree"] = b.max_degree;
  j["log_degree_lower"] = b.log_delta_lower;
  j["trivial_lower"] = b.trivial_bounds.first;
  j["trivial_upper"] = b.trivial_bounds.second;
  j["edge_count_bound_holds"] = b.edge_count_bound_holds;
  j["basis_degree_bound_holds"] = b.basis_degree_bound_holds;
  j["universal_vertex_implication"] =
      std::string(edim::universal_vertex_implication_name(b.universal_vertex_implication));
  j["common_neighbor_condition"] = b.common_neighbor_condition;
  j["all_hold"] = b.all_hold();
  return j;
}

void print_bounds_human(const edim::BoundsReport& b) {
  std::cout << "bounds:\n"
            << "  diameter " << b.diameter << ", max degree " << b.max_degree << "\n"
            << "  ceil(log2 max-degree) lower bound: " << b.log_delta_lower
            << (b.log_delta_lower <= b.value ? "  (holds)" : "  (VIOLATED)") << "\n"
            << "  trivial range: [" << b.trivial_bounds.first << ", "
            << b.trivial_bounds.second << "]\n"
            << "  edge count <= (diameter+1)^value: "
            << (b.edge_count_bound_holds ? "holds" : "VIOLATED") << "\n"
            << "  witness degrees <= 2^(value-1): "
            << (b.basis_degree_bound_holds ? "holds" : "VIOLATED") << "\n"
            << "  universal vertices: "
            << edim::universal_vertex_implication_name(b.universal_vertex_implication)
            << "\n"
            << "  value = n-1 forces shared neighbors: "
            << (b.common_neighbor_condition ? "holds" : "VIOLATED") << "\n"
            << "  all bounds: " << (b.all_hold() ? "hold" : "VIOLATED") << "\n";
}

int run_gen(const std::string& spec_text, const std::string& out, bool json_mode) {
  const Timer timer;
  const edim::LabeledGraph lg = graph_from_spec_text(spec_text);
  edim::write_edge_list_file(out, lg.graph, spec_text);
  edim::write_labels_file(out + ".labels", lg.labels);
  if (json_mode) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "gen";
    j["family"] = spec_text;
    j["vertices"] = lg.graph.vertex_count();
    j["edges"] = lg.graph.edge_count();
    j["out"] = out;
    j["labels_out"] = out + ".labels";
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "wrote " << out << " (" << lg.graph.vertex_count() << " vertices, "
              << lg.graph.edge_count() << " edges) and " << out << ".labels\n";
    print_wall(timer);
  }
  return kExitOk;
}

int run_solve(const std::string& path, const std::string& kind_text,
              const std::string& method_text, long long budget,
              const std::string& family_text, bool bounds_flag, bool json_mode) {
  const Timer timer;
  const LoadedGraph in = load_graph(path);
  const edim::DimensionKind kind = kind_text == "vertex" ? edim::DimensionKind::vertex
                                                         : edim::DimensionKind::edge;

  edim::SolveResult res;
  if (method_text == "exact") {
    res = edim::exact_dimension(in.graph, kind, budget);
  } else if (method_text == "greedy") {
    if (kind != edim::DimensionKind::edge)
      throw edim::Error(edim::Errc::parameter_out_of_domain,
                        "the greedy method covers edge pairs only; use --kind edge");
    res = edim::greedy_edim(in.graph);
  } else if (method_text == "tree") {
    res = edim::tree_edim(in.graph);
    // the tree formula and its leaf witness serve both dimensions
    res.kind = kind;
  } else {
    if (family_text.empty())
      throw edim::Error(edim::Errc::parameter_out_of_domain,
                        "--method formula needs --family <spec> naming the input");
    const edim::FamilySpec spec = edim::FamilySpec::parse(family_text);
    const edim::LabeledGraph built = edim::make_family(spec);
    if (built.graph.vertex_count() != in.graph.vertex_count() ||
        built.graph.edge_count() != in.graph.edge_count())
      throw edim::Error(edim::Errc::parameter_out_of_domain,
                        "--family " + spec.to_string() +
                            " does not match the input graph (order or size differ)");
    res = edim::SolveResult{.value = edim::closed_formula(spec, kind),
                            .witness = {},
                            .kind = kind,
                            .method = edim::SolveMethod::closed_formula,
                            .explored = 0};
  }

  std::optional<edim::BoundsReport> bounds;
  if (bounds_flag) bounds = edim::check_bounds(in.graph, res);

  if (json_mode) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "solve";
    j["input"] = input_json(in);
    j["kind"] = edim::dimension_kind_name(res.kind);
    j["method"] = edim::solve_method_name(res.method);
    j["budget"] = budget;
    j["value"] = res.value;
    j["witness"] = res.witness;
    if (in.labels) {
      std::vector<std::string> names;
      names.reserve(res.witness.size());
      for (int v : res.witness) names.push_back((*in.labels)[static_cast<std::size_t>(v)]);
      j["witness_labels"] = names;
    }
    j["explored"] = res.explored;
    if (bounds) j["bounds"] = bounds_json(*bounds);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "input: " << path << " (" << in.graph.vertex_count() << " vertices, "
              << in.graph.edge_count() << " edges)\n"
              << "kind: " << edim::dimension_kind_name(res.kind)
              << "   method: " << edim::solve_method_name(res.method) << "\n"
              << "value: " << res.value << "\n";
    if (!res.witness.empty())
      std::cout << "witness: " << joined_names(in, res.witness) << "\n";
    std::cout << "explored: " << res.explored << " subset tests\n";
    if (bounds) print_bounds_human(*bounds);
    print_wall(timer);
  }
  return kExitOk;
}

int run_verify(const std::string& path, const std::string& set_text,
               const std::string& kind_text, bool json_mode) {
  const Timer timer;
  const LoadedGraph in = load_graph(path);
  const std::vector<std::string> tokens = split_commas(set_text);
  if (tokens.empty())
    throw edim::Error(edim::Errc::parameter_out_of_domain, "--set must name vertices");

  // Prefer labels whenever the label map resolves every token; fall back to
  // raw integer ids otherwise.
  std::vector<int> ids;
  bool by_label = false;
  if (in.labels) {
    const edim::LabeledGraph lg{in.graph, *in.labels};
    std::vector<int> resolved;
    bool all = true;
    for (const std::string& tok : tokens) {
      const std::optional<int> id = lg.find_label(tok);
      if (!id) {
        all = false;
        break;
      }
      resolved.push_back(*id);
    }
    if (all) {
      ids = std::move(resolved);
      by_label = true;
    }
  }
  if (!by_label) {
    for (const std::string& tok : tokens) {
      const std::optional<long long> v = parse_int(tok);
      if (!v)
        throw edim::Error(edim::Errc::parse_error,
                          "'" + tok + "' is neither a known label nor an integer id");
      ids.push_back(static_cast<int>(*v));
    }
    for (int v : ids) in.graph.check_vertex(v);
  }

  const bool edge_kind = kind_text != "vertex";
  const edim::GeneratorCheck check = edge_kind
                                         ? edim::is_edge_metric_generator(in.graph, ids)
                                         : edim::is_metric_generator(in.graph, ids);

  if (json_mode) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "verify";
    j["input"] = input_json(in);
    j["kind"] = edge_kind ? "edge" : "vertex";
    j["set"] = ids;
    if (in.labels) {
      std::vector<std::string> names;
      for (int v : ids) names.push_back((*in.labels)[static_cast<std::size_t>(v)]);
      j["set_labels"] = names;
    }
    j["ok"] = check.ok;
    if (check.witness) {
      ordered_json w;
      w["ids"] = {check.witness->first, check.witness->second};
      if (edge_kind) {
        const auto [u1, v1] = in.graph.edge(check.witness->first);
        const auto [u2, v2] = in.graph.edge(check.witness->second);
        w["endpoints"] = {{u1, v1}, {u2, v2}};
      }
      j["witness"] = w;
    } else {
      j["witness"] = nullptr;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "input: " << path << " (" << in.graph.vertex_count() << " vertices, "
              << in.graph.edge_count() << " edges)\n"
              << "set: " << joined_names(in, ids) << "\n"
              << "kind: " << (edge_kind ? "edge" : "vertex") << "\n"
              << "result: " << (check.ok ? "generator" : "NOT a generator") << "\n";
    if (check.witness) {
      if (edge_kind) {
        const auto [u1, v1] = in.graph.edge(check.witness->first);
        const auto [u2, v2] = in.graph.edge(check.witness->second);
        std::cout << "undistinguished edges: " << check.witness->first << " ("
                  << vertex_name(in, u1) << "-" << vertex_name(in, v1) << ") and "
                  << check.witness->second << " (" << vertex_name(in, u2) << "-"
                  << vertex_name(in, v2) << ")\n";
      } else {
        std::cout << "undistinguished vertices: "
                  << vertex_name(in, check.witness->first) << " and "
                  << vertex_name(in, check.witness->second) << "\n";
      }
    }
    print_wall(timer);
  }
  return check.ok ? kExitOk : kExitVerifyFalse;
}

int run_reduce(const std::string& in_path, const std::string& out_path,
               bool json_mode) {
  const Timer timer;
  std::ifstream fin(in_path);
  if (!fin)
    throw edim::Error(edim::Errc::io_error, "cannot open '" + in_path + "' for reading");
  const edim::CnfFormula f = edim::parse_cnf(fin);
  const edim::ReductionInstance inst = edim::build_reduction(f);
  edim::write_edge_list_file(out_path, inst.graph.graph, "reduction of " + in_path);
  edim::write_labels_file(out_path + ".labels", inst.graph.labels);
  if (json_mode) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "reduce";
    j["input"] = ordered_json{{"path", in_path},
                              {"variables", f.num_vars},
                              {"clauses", static_cast<int>(f.clauses.size())}};
    j["order"] = inst.graph.graph.vertex_count();
    j["edges"] = inst.graph.graph.edge_count();
    j["r"] = inst.r;
    j["out"] = out_path;
    j["labels_out"] = out_path + ".labels";
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "r=" << inst.r << "\n"
              << "wrote " << out_path << " (" << inst.graph.graph.vertex_count()
              << " vertices, " << inst.graph.graph.edge_count() << " edges) and "
              << out_path << ".labels\n";
    print_wall(timer);
  }
  return kExitOk;
}

struct CompareRow {
  std::string family;
  int vertices = 0;
  int edges = 0;
  std::optional<int> dim;
  std::optional<int> edim;
  std::string classification;  // or inline error text
  bool failed = false;
};

int run_compare(const std::vector<std::string>& specs, long long budget,
                bool json_mode) {
  const Timer timer;
  std::vector<CompareRow> rows;
  for (const std::string& text : specs) {
    const edim::FamilySpec spec = edim::FamilySpec::parse(text);
    const edim::LabeledGraph lg = edim::make_family(spec);
    CompareRow row;
    row.family = spec.to_string();
    row.vertices = lg.graph.vertex_count();
    row.edges = lg.graph.edge_count();
    try {
      const int dim = edim::exact_dimension(lg.graph, edim::DimensionKind::vertex, budget).value;
      const int ed = edim::exact_dimension(lg.graph, edim::DimensionKind::edge, budget).value;
      row.dim = dim;
      row.edim = ed;
      row.classification = dim == ed ? "equal" : (dim < ed ? "dim<edim" : "edim<dim");
    } catch (const edim::BudgetExceeded& e) {
      row.failed = true;
      row.classification = "budget exceeded after " + std::to_string(e.explored()) +
                           " subset tests (sizes below " +
                           std::to_string(e.proven_lower_bound()) + " ruled out)";
    }
    rows.push_back(std::move(row));
  }

  if (json_mode) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "compare";
    j["budget"] = budget;
    ordered_json out_rows = ordered_json::array();
    for (const CompareRow& row : rows) {
      ordered_json r;
      r["family"] = row.family;
      r["vertices"] = row.vertices;
      r["edges"] = row.edges;
      if (row.failed) {
        r["error"] = row.classification;
      } else {
        r["dim"] = *row.dim;
        r["edim"] = *row.edim;
        r["classification"] = row.classification;
      }
      out_rows.push_back(std::move(r));
    }
    j["rows"] = std::move(out_rows);
    std::cout << j.dump(2) << "\n";
  } else {
    std::size_t width = 6;
    for (const CompareRow& row : rows) width = std::max(width, row.family.size());
    std::cout << std::left << std::setw(static_cast<int>(width + 2)) << "family"
              << std::right << std::setw(6) << "n" << std::setw(6) << "m"
              << std::setw(6) << "dim" << std::setw(6) << "edim"
              << "  classification\n";
    for (const CompareRow& row : rows) {
      std::cout << std::left << std::setw(static_cast<int>(width + 2)) << row.family
                << std::right << std::setw(6) << row.vertices << std::setw(6)
                << row.edges;
      if (row.failed)
        std::cout << std::setw(6) << "-" << std::setw(6) << "-"
                  << "  " << row.classification << "\n";
      else
        std::cout << std::setw(6) << *row.dim << std::setw(6) << *row.edim << "  "
                  << row.classification << "\n";
    }
    print_wall(timer);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge metric dimension toolkit: generate, solve, verify, reduce, compare"};
  app.require_subcommand(1);

  std::string gen_spec;
  std::string gen_out;
  bool gen_json = false;
  CLI::App* gen = app.add_subcommand("gen", "generate a family graph into a file");
  gen->add_option("spec", gen_spec, "family spec, e.g. wheel:6 or realize:4,6,9")
      ->required();
  gen->add_option("out", gen_out, "output edge-list path")->required();
  gen->add_flag("--json", gen_json, "JSON report on stdout");

  std::string solve_in;
  std::string solve_kind = "edge";
  std::string solve_method = "exact";
  long long solve_budget = edim::kDefaultSubsetBudget;
  std::string solve_family;
  bool solve_bounds = false;
  bool solve_json = false;
  CLI::App* solve = app.add_subcommand("solve", "compute a dimension of a graph file");
  solve->add_option("in", solve_in, "edge-list path")->required();
  solve->add_option("--kind", solve_kind, "vertex or edge (default edge)")
      ->check(CLI::IsMember({"vertex", "edge"}));
  solve->add_option("--method", solve_method,
                    "exact, greedy, tree or formula (default exact)")
      ->check(CLI::IsMember({"exact", "greedy", "tree", "formula"}));
  solve->add_option("--budget", solve_budget, "max subset tests for exact search")
      ->check(CLI::PositiveNumber);
  solve->add_option("--family", solve_family, "family spec backing --method formula");
  solve->add_flag("--bounds", solve_bounds,
                  "cross-check the exact edge value against the bound suite");
  solve->add_flag("--json", solve_json, "JSON report on stdout");

  std::string verify_in;
  std::string verify_set;
  std::string verify_kind = "edge";
  bool verify_json = false;
  CLI::App* verify = app.add_subcommand("verify", "test a vertex set as a generator");
  verify->add_option("in", verify_in, "edge-list path")->required();
  verify->add_option("--set", verify_set, "comma-separated labels or ids")->required();
  verify->add_option("--kind", verify_kind, "vertex or edge (default edge)")
      ->check(CLI::IsMember({"vertex", "edge"}));
  verify->add_flag("--json", verify_json, "JSON report on stdout");

  std::string reduce_in;
  std::string reduce_out;
  bool reduce_json = false;
  CLI::App* reduce = app.add_subcommand("reduce", "build the clause-to-graph instance");
  reduce->add_option("in", reduce_in, "DIMACS CNF path")->required();
  reduce->add_option("out", reduce_out, "output edge-list path")->required();
  reduce->add_flag("--json", reduce_json, "JSON report on stdout");

  std::vector<std::string> compare_specs;
  long long compare_budget = edim::kDefaultSubsetBudget;
  bool compare_json = false;
  CLI::App* compare =
      app.add_subcommand("compare", "solve both dimensions across family specs");
  compare->add_option("specs", compare_specs, "family specs")->required()->expected(-1);
  compare->add_option("--budget", compare_budget, "max subset tests per search")
      ->check(CLI::PositiveNumber);
  compare->add_flag("--json", compare_json, "JSON report on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParameter;
  }

  try {
    if (gen->parsed()) return run_gen(gen_spec, gen_out, gen_json);
    if (solve->parsed())
      return run_solve(solve_in, solve_kind, solve_method, solve_budget, solve_family,
                       solve_bounds, solve_json);
    if (verify->parsed()) return run_verify(verify_in, verify_set, verify_kind, verify_json);
    if (reduce->parsed()) return run_reduce(reduce_in, reduce_out, reduce_json);
    if (compare->parsed()) return run_compare(compare_specs, compare_budget, compare_json);
  } catch (const edim::Error& e) {
    std::cerr << "error (" << edim::errc_name(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParameter;
  }
  return kExitParameter;
}
