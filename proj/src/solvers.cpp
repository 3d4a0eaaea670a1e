#include "edim/solvers.hpp"

#include <algorithm>
#include <string>

namespace edim {

namespace {

[[noreturn]] void domain_error(const std::string& what) {
  throw Error(Errc::parameter_out_of_domain, what);
}

std::vector<Bitset> edge_pair_coverage(const Graph& g, const EdgeDistanceTable& t) {
  std::vector<Bitset> cov;
  cov.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    cov.push_back(distinguished_pairs(g, v, t).covered);
  return cov;
}

std::vector<Bitset> vertex_pair_coverage(const Graph& g, const DistanceMatrix& dm) {
  const int n = g.vertex_count();
  if (n > kMaxPairCoverageEdges)
    throw Error(Errc::pair_universe_too_large,
                "vertex pair universe needs " + std::to_string(n) +
                    " > " + std::to_string(kMaxPairCoverageEdges) + " ids");
  std::vector<Bitset> cov;
  cov.reserve(n);
  for (int v = 0; v < n; ++v) {
    Bitset b(pair_count(n));
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (dm.at(i, v) != dm.at(j, v)) b.set(pair_index(i, j));
    cov.push_back(std::move(b));
  }
  return cov;
}

/// Depth-first walk over size-k id subsets in lexicographic order. acc[d]
/// holds the coverage union of the first d chosen vertices; a branch is cut
/// when even k-d copies of the best remaining coverage cannot complete the
/// universe (suffix_max is non-increasing, so the cut ends the sibling loop).
struct ExactSearch {
  const std::vector<Bitset>& cov;
  const std::vector<std::size_t>& suffix_max;
  std::size_t universe;
  int n;
  long long budget;
  long long explored = 0;
  std::vector<Bitset> acc;
  std::vector<int> chosen;
  std::vector<int> found;

  bool run(int k) {
    acc.assign(k, Bitset(cov.empty() ? 0 : cov.front().size()));
    chosen.clear();
    return descend(0, k, 0);
  }

  bool descend(int depth, int k, int first) {
    const Bitset& base = acc[depth];
    const std::size_t have = base.count();
    for (int v = first; v <= n - (k - depth); ++v) {
      if (have + static_cast<std::size_t>(k - depth) * suffix_max[v] < universe) break;
      if (depth + 1 == k) {
        if (explored >= budget) throw BudgetExceeded(explored, k);
        ++explored;
        if (base.count_or(cov[v]) == universe) {
          found = chosen;
          found.push_back(v);
          return true;
        }
      } else {
        acc[depth + 1] = base;
        acc[depth + 1] |= cov[v];
        chosen.push_back(v);
        if (descend(depth + 1, k, v + 1)) return true;
        chosen.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

const char* dimension_kind_name(DimensionKind kind) {
  return kind == DimensionKind::vertex ? "vertex" : "edge";
}

const char* solve_method_name(SolveMethod method) {
  switch (method) {
    case SolveMethod::exact: return "exact";
    case SolveMethod::greedy: return "greedy";
    case SolveMethod::tree_formula: return "tree";
    case SolveMethod::closed_formula: return "formula";
  }
  return "unknown";
}

BudgetExceeded::BudgetExceeded(long long explored, int proven_lower_bound)
    : Error(Errc::budget_exceeded,
            "subset budget exhausted after " + std::to_string(explored) +
                " candidate sets; every set smaller than " +
                std::to_string(proven_lower_bound) + " vertices fails"),
      explored_(explored),
      proven_lower_bound_(proven_lower_bound) {}

SolveResult exact_dimension(const Graph& g, DimensionKind kind, long long budget) {
  const int n = g.vertex_count();
  if (n < 2) domain_error("exact search needs at least 2 vertices");
  if (budget < 1) domain_error("subset budget must be positive");

  const DistanceMatrix dm = all_pairs_distances(g);
  std::vector<Bitset> cov;
  std::size_t universe = 0;
  if (kind == DimensionKind::edge) {
    cov = edge_pair_coverage(g, edge_distance_table(g, dm));
    universe = pair_count(g.edge_count());
  } else {
    cov = vertex_pair_coverage(g, dm);
    universe = pair_count(n);
  }

  std::vector<std::size_t> suffix_max(n + 1, 0);
  for (int v = n - 1; v >= 0; --v)
    suffix_max[v] = std::max(suffix_max[v + 1], cov[v].count());

  ExactSearch search{.cov = cov,
                     .suffix_max = suffix_max,
                     .universe = universe,
                     .n = n,
                     .budget = budget,
                     .explored = 0,
                     .acc = {},
                     .chosen = {},
                     .found = {}};
  // All ids but one always form a generator, so some k <= n-1 succeeds.
  for (int k = 1; k <= n - 1; ++k) {
    if (search.run(k))
      return {.value = k,
              .witness = search.found,
              .kind = kind,
              .method = SolveMethod::exact,
              .explored = search.explored};
  }
  throw std::logic_error("subset search exhausted all sizes below the vertex count");
}

SolveResult greedy_edim(const Graph& g) {
  const int m = g.edge_count();
  if (m < 2)
    return {.value = 1,
            .witness = {0},
            .kind = DimensionKind::edge,
            .method = SolveMethod::greedy,
            .explored = 0};

  const DistanceMatrix dm = all_pairs_distances(g);
  const auto cov = edge_pair_coverage(g, edge_distance_table(g, dm));
  const std::size_t universe = pair_count(m);

  Bitset covered(universe);
  std::vector<int> witness;
  while (covered.count() < universe) {
    int best = -1;
    std::size_t best_gain = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      const std::size_t gain = covered.count_gain(cov[v]);
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    if (best < 0)
      throw Error(Errc::not_a_generator,
                  "some edge pair is distinguished by no vertex at all");
    covered |= cov[best];
    witness.push_back(best);
  }
  std::sort(witness.begin(), witness.end());
  return {.value = static_cast<int>(witness.size()),
          .witness = std::move(witness),
          .kind = DimensionKind::edge,
          .method = SolveMethod::greedy,
          .explored = 0};
}

SolveResult tree_edim(const Graph& g) {
  const int n = g.vertex_count();
  if (g.edge_count() != n - 1)
    throw Error(Errc::not_a_tree, "connected graph with " +
                                      std::to_string(g.edge_count()) +
                                      " edges on " + std::to_string(n) +
                                      " vertices is not a tree");

  int max_degree = 0;
  for (int v = 0; v < n; ++v) max_degree = std::max(max_degree, g.degree(v));
  if (max_degree <= 2) {  // path: one leaf suffices
    int leaf = 0;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) <= 1) {
        leaf = v;
        break;
      }
    return {.value = 1,
            .witness = {leaf},
            .kind = DimensionKind::edge,
            .method = SolveMethod::tree_formula,
            .explored = 0};
  }

  // A branch hanging off v is a leg iff the walk away from v meets only
  // degree-<=2 vertices; its far end is then the leg's leaf. For each vertex
  // with more than one leg, every leg leaf except the smallest id goes into
  // the witness; leg sets of distinct vertices are disjoint in a non-path
  // tree, so the value adds up per vertex.
  int value = 0;
  std::vector<int> witness;
  for (int v = 0; v < n; ++v) {
    std::vector<int> leg_leaves;
    for (int u : g.neighbors(v)) {
      int prev = v;
      int cur = u;
      bool is_leg = true;
      while (g.degree(cur) != 1) {
        if (g.degree(cur) > 2) {
          is_leg = false;
          break;
        }
        for (int w : g.neighbors(cur))
          if (w != prev) {
            prev = cur;
            cur = w;
            break;
          }
      }
      if (is_leg) leg_leaves.push_back(cur);
    }
    if (leg_leaves.size() > 1) {
      value += static_cast<int>(leg_leaves.size()) - 1;
      const int kept = *std::min_element(leg_leaves.begin(), leg_leaves.end());
      for (int leaf : leg_leaves)
        if (leaf != kept) witness.push_back(leaf);
    }
  }
  std::sort(witness.begin(), witness.end());
  return {.value = value,
          .witness = std::move(witness),
          .kind = DimensionKind::edge,
          .method = SolveMethod::tree_formula,
          .explored = 0};
}

namespace {

[[noreturn]] void no_formula(const FamilySpec& spec, DimensionKind kind) {
  throw Error(Errc::no_known_formula,
              "no known " + std::string(dimension_kind_name(kind)) +
                  "-dimension formula for " + spec.to_string());
}

int fit_int(long long value, const FamilySpec& spec) {
  if (value < 0 || value > (1LL << 30))
    domain_error("formula value out of range for " + spec.to_string());
  return static_cast<int>(value);
}

}  // namespace

int closed_formula(const FamilySpec& spec, DimensionKind kind) {
  const bool edge = kind == DimensionKind::edge;
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::path:
      if (p[0] < 2) no_formula(spec, kind);
      return 1;
    case FamilyKind::cycle:
      if (p[0] < 3) no_formula(spec, kind);
      return 2;
    case FamilyKind::complete:
      if (p[0] < 2) no_formula(spec, kind);
      return fit_int(p[0] - 1, spec);
    case FamilyKind::complete_bipartite: {
      if (p[0] < 1 || p[1] < 1) no_formula(spec, kind);
      if (p[0] == 1 && p[1] == 1) return 1;  // a single edge, i.e. a path
      return fit_int(p[0] + p[1] - 2, spec);
    }
    case FamilyKind::star: {
      if (p[0] < 1) no_formula(spec, kind);
      if (p[0] == 1) return 1;  // a single edge, i.e. a path
      return fit_int(p[0] - 1, spec);
    }
    case FamilyKind::wheel: {
      const long long n = p[0];
      if (n < 3) no_formula(spec, kind);
      if (edge) return fit_int(n <= 4 ? n : n - 1, spec);
      if (n == 3 || n == 6) return 3;
      if (n <= 5) return 2;
      return fit_int((2 * n + 2) / 5, spec);
    }
    case FamilyKind::fan: {
      const long long n = p[0];
      if (n < 1) no_formula(spec, kind);
      if (edge) return fit_int(n <= 3 ? n : n - 1, spec);
      if (n == 1) return 1;
      if (n <= 3) return 2;
      if (n == 6) return 3;
      return fit_int((2 * n + 2) / 5, spec);
    }
    case FamilyKind::grid:
      if (p[1] < 2 || p[0] < p[1]) no_formula(spec, kind);
      return 2;
    case FamilyKind::torus: {
      if (p[0] < 3 || p[1] < 3) no_formula(spec, kind);
      if (!edge) return (p[0] * p[1]) % 2 == 0 ? 4 : 3;
      if (p[0] % 4 == 0 && p[1] % 4 == 0) return 3;
      no_formula(spec, kind);
    }
    case FamilyKind::broom:
      if (p[0] < 2 || p[0] > p[1] - 2) no_formula(spec, kind);
      return fit_int(p[0], spec);
    case FamilyKind::family_f: {
      if (p[0] < 1 || p[1] < 2 || p[2] < 0) no_formula(spec, kind);
      return fit_int(edge ? 2 * p[0] + p[1] - 2 : p[0] + p[1] - 1, spec);
    }
    default:
      no_formula(spec, kind);
  }
}

std::vector<std::vector<int>> enumerate_bases(const Graph& g, DimensionKind kind,
                                              int size) {
  if (size < 1) domain_error("basis size must be at least 1");
  const int n = g.vertex_count();
  std::vector<std::vector<int>> out;
  if (size > n) return out;

  std::vector<int> pick(size);
  for (int i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    const GeneratorCheck check = kind == DimensionKind::edge
                                     ? is_edge_metric_generator(g, pick)
                                     : is_metric_generator(g, pick);
    if (check.ok) out.push_back(pick);
    int i = size - 1;
    while (i >= 0 && pick[i] == n - size + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

const char* universal_vertex_implication_name(UniversalVertexImplication u) {
  switch (u) {
    case UniversalVertexImplication::no_universal_vertex: return "no_universal_vertex";
    case UniversalVertexImplication::one_universal_holds: return "one_universal_holds";
    case UniversalVertexImplication::one_universal_violated: return "one_universal_violated";
    case UniversalVertexImplication::two_universal_holds: return "two_universal_holds";
    case UniversalVertexImplication::two_universal_violated: return "two_universal_violated";
  }
  return "unknown";
}

namespace {

int ceil_log2(int x) {
  int level = 0;
  while ((1LL << level) < x) ++level;
  return level;
}

bool power_reaches(long long base, int exponent, long long target) {
  long long acc = 1;
  for (int i = 0; i < exponent && acc < target; ++i) acc *= base;
  return acc >= target;
}

}  // namespace

bool BoundsReport::all_hold() const {
  return value >= trivial_bounds.first && value <= trivial_bounds.second &&
         value >= log_delta_lower && edge_count_bound_holds &&
         basis_degree_bound_holds &&
         universal_vertex_implication != UniversalVertexImplication::one_universal_violated &&
         universal_vertex_implication != UniversalVertexImplication::two_universal_violated &&
         common_neighbor_condition;
}

BoundsReport check_bounds(const Graph& g, const SolveResult& res) {
  if (res.method != SolveMethod::exact || res.kind != DimensionKind::edge)
    throw Error(Errc::wrong_result_kind,
                "bound checks apply to exact edge-dimension results only");

  const GraphStats stats = graph_stats(g);
  const int n = g.vertex_count();
  const int k = res.value;

  BoundsReport report;
  report.value = k;
  report.vertex_count = n;
  report.diameter = stats.diameter;
  report.max_degree = stats.max_degree;
  report.log_delta_lower = ceil_log2(std::max(1, stats.max_degree));
  report.trivial_bounds = {1, n - 1};
  report.edge_count_bound_holds =
      power_reaches(stats.diameter + 1, k, g.edge_count());

  report.basis_degree_bound_holds = true;
  for (int v : res.witness)
    if (k - 1 < 31 && g.degree(v) > (1 << (k - 1)))
      report.basis_degree_bound_holds = false;

  if (stats.universal_vertex_count == 0)
    report.universal_vertex_implication = UniversalVertexImplication::no_universal_vertex;
  else if (stats.universal_vertex_count == 1)
    report.universal_vertex_implication =
        (k == n - 1 || k == n - 2) ? UniversalVertexImplication::one_universal_holds
                                   : UniversalVertexImplication::one_universal_violated;
  else
    report.universal_vertex_implication =
        k == n - 1 ? UniversalVertexImplication::two_universal_holds
                   : UniversalVertexImplication::two_universal_violated;

  // The shared-neighbour requirement for value n-1 rests on removing two
  // vertices and keeping a nonempty generator, which needs a third vertex.
  report.common_neighbor_condition =
      k != n - 1 || n < 3 || stats.all_pairs_share_neighbor;

  return report;
}

}  // namespace edim
