#include "edim/reduction.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "edim/graph.hpp"

namespace edim {

namespace {

[[noreturn]] void fail(Errc code, int line, const std::string& what) {
  throw Error(code, "line " + std::to_string(line) + ": " + what);
}

std::optional<long long> parse_int(std::string_view tok) {
  long long value = 0;
  const char* begin = tok.data();
  const char* end = begin + tok.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

void close_clause(CnfFormula& f, std::vector<int>& open, int declared, int line) {
  if (static_cast<int>(f.clauses.size()) >= declared)
    fail(Errc::parse_error, line, "more clauses than the header declares");
  if (open.size() != 3)
    fail(Errc::clause_arity, line,
         "clause has " + std::to_string(open.size()) + " literals, expected 3");
  for (int x = 0; x < 3; ++x)
    for (int y = x + 1; y < 3; ++y)
      if (std::abs(open[static_cast<std::size_t>(x)]) ==
          std::abs(open[static_cast<std::size_t>(y)]))
        fail(Errc::repeated_variable_in_clause, line,
             "variable " + std::to_string(std::abs(open[static_cast<std::size_t>(x)])) +
                 " appears twice in one clause");
  f.clauses.push_back({open[0], open[1], open[2]});
  open.clear();
}

constexpr long long kMaxCnfSize = 1'000'000;

}  // namespace

CnfFormula parse_cnf(std::istream& in) {
  CnfFormula f;
  int declared = 0;
  bool header_seen = false;
  std::vector<int> open;
  int line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(std::move(t));
    if (toks.empty()) continue;
    if (toks.front().front() == 'c') continue;  // comment line
    if (!header_seen) {
      if (toks.front() != "p")
        fail(Errc::parse_error, line_no, "expected 'p cnf <vars> <clauses>' header");
      if (toks.size() != 4 || toks[1] != "cnf")
        fail(Errc::parse_error, line_no, "malformed header, want 'p cnf <vars> <clauses>'");
      auto nv = parse_int(toks[2]);
      auto nc = parse_int(toks[3]);
      if (!nv || !nc || *nv < 1 || *nc < 1 || *nv > kMaxCnfSize || *nc > kMaxCnfSize)
        fail(Errc::parse_error, line_no, "header counts must be in 1.." +
                                             std::to_string(kMaxCnfSize));
      f.num_vars = static_cast<int>(*nv);
      declared = static_cast<int>(*nc);
      header_seen = true;
      continue;
    }
    for (const std::string& tok : toks) {
      auto lit = parse_int(tok);
      if (!lit) fail(Errc::parse_error, line_no, "not an integer literal: '" + tok + "'");
      if (*lit == 0) {
        close_clause(f, open, declared, line_no);
        continue;
      }
      if (std::abs(*lit) > f.num_vars)
        fail(Errc::parse_error, line_no,
             "literal " + tok + " is outside 1.." + std::to_string(f.num_vars));
      open.push_back(static_cast<int>(*lit));
    }
  }
  if (!header_seen)
    throw Error(Errc::parse_error, "end of input: missing 'p cnf <vars> <clauses>' header");
  if (!open.empty())
    throw Error(Errc::parse_error, "end of input: unterminated clause (missing 0)");
  if (static_cast<int>(f.clauses.size()) != declared)
    throw Error(Errc::parse_error,
                "end of input: read " + std::to_string(f.clauses.size()) +
                    " clauses but the header declares " + std::to_string(declared));
  return f;
}

CnfFormula parse_cnf_text(const std::string& text) {
  std::istringstream in(text);
  return parse_cnf(in);
}

ReductionInstance build_reduction(const CnfFormula& f) {
  const int n = f.num_vars;
  const int m = static_cast<int>(f.clauses.size());
  if (n < 1 || m < 1)
    throw Error(Errc::parameter_out_of_domain,
                "reduction needs at least one variable and one clause");
  for (const auto& cl : f.clauses) {
    for (int lit : cl)
      if (lit == 0 || std::abs(lit) > n)
        throw Error(Errc::parameter_out_of_domain,
                    "clause literal " + std::to_string(lit) + " is outside 1.." +
                        std::to_string(n));
    for (int x = 0; x < 3; ++x)
      for (int y = x + 1; y < 3; ++y)
        if (std::abs(cl[static_cast<std::size_t>(x)]) ==
            std::abs(cl[static_cast<std::size_t>(y)]))
          throw Error(Errc::repeated_variable_in_clause,
                      "variable " +
                          std::to_string(std::abs(cl[static_cast<std::size_t>(x)])) +
                          " appears twice in one clause");
  }
  const long long order_ll = 6LL * n + 10LL * m;
  const long long edge_estimate =
      6LL * n + 10LL * m + 6LL * m + 1LL * n * m + 1LL * m * (m - 1) / 2;
  if (order_ll > 200'000 || edge_estimate > 20'000'000)
    throw Error(Errc::parameter_out_of_domain, "reduction instance too large (" +
                                                   std::to_string(order_ll) +
                                                   " vertices)");

  const int order = static_cast<int>(order_ll);
  const auto t_vertex = [](int i) { return 6 * (i - 1); };
  const auto f_vertex = [](int i) { return 6 * (i - 1) + 1; };
  const auto a_vertex = [](int i, int k) { return 6 * (i - 1) + 1 + k; };
  const auto b_vertex = [](int i, int k) { return 6 * (i - 1) + 3 + k; };
  const auto c_vertex = [n](int j, int k) { return 6 * n + 10 * (j - 1) + k - 1; };

  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(order));
  for (int i = 1; i <= n; ++i) {
    const std::string s = std::to_string(i);
    labels.push_back("T_" + s);
    labels.push_back("F_" + s);
    labels.push_back("a_" + s + "^1");
    labels.push_back("a_" + s + "^2");
    labels.push_back("b_" + s + "^1");
    labels.push_back("b_" + s + "^2");
  }
  for (int j = 1; j <= m; ++j)
    for (int k = 1; k <= 10; ++k)
      labels.push_back("c_" + std::to_string(j) + "^" + std::to_string(k));

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(edge_estimate));
  // variable gadgets: the 6-cycle T - a1 - b1 - F - b2 - a2 - T
  for (int i = 1; i <= n; ++i) {
    edges.emplace_back(t_vertex(i), a_vertex(i, 1));
    edges.emplace_back(t_vertex(i), a_vertex(i, 2));
    edges.emplace_back(b_vertex(i, 1), a_vertex(i, 1));
    edges.emplace_back(b_vertex(i, 2), a_vertex(i, 2));
    edges.emplace_back(f_vertex(i), b_vertex(i, 1));
    edges.emplace_back(f_vertex(i), b_vertex(i, 2));
  }
  // clause gadgets
  for (int j = 1; j <= m; ++j) {
    auto c = [&](int k) { return c_vertex(j, k); };
    edges.emplace_back(c(1), c(2));
    edges.emplace_back(c(1), c(3));
    edges.emplace_back(c(4), c(2));
    edges.emplace_back(c(4), c(3));
    edges.emplace_back(c(2), c(5));
    edges.emplace_back(c(5), c(6));
    edges.emplace_back(c(5), c(7));
    edges.emplace_back(c(3), c(8));
    edges.emplace_back(c(8), c(9));
    edges.emplace_back(c(8), c(10));
  }
  // communication edges: occurrence polarity decides which clause port the
  // T/F poles reach
  for (int j = 1; j <= m; ++j) {
    for (int lit : f.clauses[static_cast<std::size_t>(j) - 1]) {
      const int i = std::abs(lit);
      if (lit > 0) {
        edges.emplace_back(t_vertex(i), c_vertex(j, 1));
        edges.emplace_back(f_vertex(i), c_vertex(j, 2));
      } else {
        edges.emplace_back(t_vertex(i), c_vertex(j, 2));
        edges.emplace_back(f_vertex(i), c_vertex(j, 1));
      }
    }
  }
  // neutralizing edges: variables absent from a clause still reach its block
  for (int j = 1; j <= m; ++j) {
    const auto& cl = f.clauses[static_cast<std::size_t>(j) - 1];
    for (int k = 1; k <= n; ++k) {
      const bool present = std::abs(cl[0]) == k || std::abs(cl[1]) == k ||
                           std::abs(cl[2]) == k;
      if (!present) edges.emplace_back(t_vertex(k), c_vertex(j, 2));
    }
  }
  // correcting edges: clique over the c^2 ports
  for (int j = 1; j <= m; ++j)
    for (int k = j + 1; k <= m; ++k)
      edges.emplace_back(c_vertex(j, 2), c_vertex(k, 2));

  return ReductionInstance{LabeledGraph{Graph(order, std::move(edges)), std::move(labels)},
                           n, m, 2 * m + n};
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
  if (a.values.size() != static_cast<std::size_t>(f.num_vars))
    throw Error(Errc::parameter_out_of_domain,
                "assignment covers " + std::to_string(a.values.size()) +
                    " variables, expected " + std::to_string(f.num_vars));
  for (const auto& cl : f.clauses) {
    bool sat = false;
    for (int lit : cl)
      if ((lit > 0) == a.value(std::abs(lit))) {
        sat = true;
        break;
      }
    if (!sat) return false;
  }
  return true;
}

std::optional<Assignment> brute_force_sat(const CnfFormula& f) {
  if (f.num_vars > 25)
    throw Error(Errc::too_many_variables,
                "exhaustive satisfiability check handles at most 25 variables, got " +
                    std::to_string(f.num_vars));
  Assignment a;
  a.values.assign(static_cast<std::size_t>(f.num_vars), false);
  const long long total = 1LL << f.num_vars;
  for (long long mask = 0; mask < total; ++mask) {
    for (int i = 0; i < f.num_vars; ++i)
      a.values[static_cast<std::size_t>(i)] = (mask >> i) & 1;
    if (satisfies(f, a)) return a;
  }
  return std::nullopt;
}

std::vector<int> generator_from_assignment(const ReductionInstance& inst,
                                           const Assignment& a) {
  if (a.values.size() != static_cast<std::size_t>(inst.num_vars))
    throw Error(Errc::parameter_out_of_domain,
                "assignment covers " + std::to_string(a.values.size()) +
                    " variables, expected " + std::to_string(inst.num_vars));
  std::vector<int> s;
  s.reserve(static_cast<std::size_t>(inst.r));
  for (int i = 1; i <= inst.num_vars; ++i)
    s.push_back(a.value(i) ? inst.a_vertex(i, 1) : inst.b_vertex(i, 1));
  for (int j = 1; j <= inst.num_clauses; ++j) {
    s.push_back(inst.c_vertex(j, 6));
    s.push_back(inst.c_vertex(j, 9));
  }
  std::sort(s.begin(), s.end());
  return s;
}

Assignment assignment_from_generator(const ReductionInstance& inst,
                                     std::span<const int> generator) {
  const Graph& g = inst.graph.graph;
  for (int v : generator) g.check_vertex(v);
  if (static_cast<int>(generator.size()) != inst.r)
    throw Error(Errc::wrong_cardinality,
                "generator has " + std::to_string(generator.size()) +
                    " vertices, expected r = " + std::to_string(inst.r));
  std::vector<char> in_set(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : generator) in_set[static_cast<std::size_t>(v)] = 1;
  auto picked = [&](int v) { return in_set[static_cast<std::size_t>(v)] != 0; };

  Assignment a;
  a.values.assign(static_cast<std::size_t>(inst.num_vars), false);
  for (int i = 1; i <= inst.num_vars; ++i) {
    const int hits = picked(inst.a_vertex(i, 1)) + picked(inst.a_vertex(i, 2)) +
                     picked(inst.b_vertex(i, 1)) + picked(inst.b_vertex(i, 2));
    if (hits == 0)
      throw Error(Errc::claim_violation,
                  "no generator vertex in the private family of variable " +
                      std::to_string(i));
    a.values[static_cast<std::size_t>(i) - 1] =
        picked(inst.a_vertex(i, 1)) || picked(inst.a_vertex(i, 2));
  }
  for (int j = 1; j <= inst.num_clauses; ++j) {
    if (!picked(inst.c_vertex(j, 6)) && !picked(inst.c_vertex(j, 7)))
      throw Error(Errc::claim_violation,
                  "no generator vertex in the first private family of clause " +
                      std::to_string(j));
    if (!picked(inst.c_vertex(j, 9)) && !picked(inst.c_vertex(j, 10)))
      throw Error(Errc::claim_violation,
                  "no generator vertex in the second private family of clause " +
                      std::to_string(j));
  }

  const GeneratorCheck check = is_edge_metric_generator(g, generator);
  if (!check.ok) {
    std::string msg = "set is not an edge metric generator";
    if (check.witness)
      msg += ": edges " + std::to_string(check.witness->first) + " and " +
             std::to_string(check.witness->second) + " share a representation";
    throw Error(Errc::not_a_generator, msg);
  }
  return a;
}

namespace {

/// True when the two edges are distinguished by at least one allowed vertex
/// and by no vertex outside the allowed set.
bool pair_private_to(const EdgeDistanceTable& t, int e1, int e2,
                     std::span<const int> allowed) {
  bool some_allowed_tells = false;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.at(e1, v) == t.at(e2, v)) continue;
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) return false;
    some_allowed_tells = true;
  }
  return some_allowed_tells;
}

/// One edge pair per variable and two per clause are each distinguished only
/// by a small private vertex set; the private sets are pairwise disjoint by
/// construction, so any generator needs one vertex from each, which forces
/// edim >= 2m + n.
bool private_pair_families_hold(const ReductionInstance& inst) {
  const Graph& g = inst.graph.graph;
  const DistanceMatrix dm = all_pairs_distances(g);
  const EdgeDistanceTable t = edge_distance_table(g, dm);
  auto eid = [&](int u, int v) {
    const std::optional<int> id = g.edge_id(u, v);
    if (!id) throw Error(Errc::invalid_id, "expected reduction edge is missing");
    return *id;
  };
  for (int i = 1; i <= inst.num_vars; ++i) {
    const std::vector<int> allowed = {inst.a_vertex(i, 1), inst.a_vertex(i, 2),
                                      inst.b_vertex(i, 1), inst.b_vertex(i, 2)};
    const int e1 = eid(inst.t_vertex(i), inst.a_vertex(i, 1));
    const int e2 = eid(inst.t_vertex(i), inst.a_vertex(i, 2));
    if (!pair_private_to(t, e1, e2, allowed)) return false;
  }
  for (int j = 1; j <= inst.num_clauses; ++j) {
    const std::vector<int> first = {inst.c_vertex(j, 6), inst.c_vertex(j, 7)};
    if (!pair_private_to(t, eid(inst.c_vertex(j, 5), inst.c_vertex(j, 6)),
                         eid(inst.c_vertex(j, 5), inst.c_vertex(j, 7)), first))
      return false;
    const std::vector<int> second = {inst.c_vertex(j, 9), inst.c_vertex(j, 10)};
    if (!pair_private_to(t, eid(inst.c_vertex(j, 8), inst.c_vertex(j, 9)),
                         eid(inst.c_vertex(j, 8), inst.c_vertex(j, 10)), second))
      return false;
  }
  return true;
}

/// Upper estimate of leaf tests for exact search through size kmax; saturates
/// at cap + 1.
long long subset_estimate(int n, int kmax, long long cap) {
  long double binom = 1.0L;
  long double total = 0.0L;
  for (int k = 1; k <= kmax; ++k) {
    binom = binom * static_cast<long double>(n - k + 1) / static_cast<long double>(k);
    total += binom;
    if (total > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<long long>(total);
}

}  // namespace

bool ReductionReport::ok() const {
  if (!structural_lower_bound_holds) return false;
  if (satisfiable) return generator_verified && round_trip_satisfies;
  if (unsat_sweep_done && assignment_sets_failed != assignment_sets_tried) return false;
  if (exact_attempted && !exact_confirms_gap) return false;
  return true;
}

ReductionReport verify_reduction(const CnfFormula& f, long long exact_budget) {
  const ReductionInstance inst = build_reduction(f);
  const Graph& g = inst.graph.graph;

  ReductionReport rep;
  rep.num_vars = inst.num_vars;
  rep.num_clauses = inst.num_clauses;
  rep.order = g.vertex_count();
  rep.edge_total = g.edge_count();
  rep.r = inst.r;
  rep.structural_lower_bound_holds = private_pair_families_hold(inst);

  const std::optional<Assignment> sat = brute_force_sat(f);
  rep.satisfiable = sat.has_value();
  if (sat) {
    const std::vector<int> s = generator_from_assignment(inst, *sat);
    rep.generator_verified = is_edge_metric_generator(g, s).ok;
    if (rep.generator_verified) {
      const Assignment back = assignment_from_generator(inst, s);
      rep.round_trip_satisfies = satisfies(f, back);
    }
    return rep;
  }

  if (inst.num_vars <= 16) {
    rep.unsat_sweep_done = true;
    rep.assignment_sets_tried = 1LL << inst.num_vars;
    Assignment a;
    a.values.assign(static_cast<std::size_t>(inst.num_vars), false);
    for (long long mask = 0; mask < rep.assignment_sets_tried; ++mask) {
      for (int i = 0; i < inst.num_vars; ++i)
        a.values[static_cast<std::size_t>(i)] = (mask >> i) & 1;
      const std::vector<int> s = generator_from_assignment(inst, a);
      if (!is_edge_metric_generator(g, s).ok) ++rep.assignment_sets_failed;
    }
  }

  const int kmax = std::min(inst.r + 1, g.vertex_count() - 1);
  const long long estimate = subset_estimate(g.vertex_count(), kmax, exact_budget);
  if (estimate <= exact_budget) {
    rep.exact_attempted = true;
    try {
      const SolveResult res = exact_dimension(g, DimensionKind::edge, exact_budget);
      rep.exact_confirms_gap = res.value > inst.r;
      rep.exact_note =
          "exact edge metric dimension is " + std::to_string(res.value);
    } catch (const BudgetExceeded& e) {
      rep.exact_confirms_gap = e.proven_lower_bound() > inst.r;
      rep.exact_note = "exact search stopped at budget with sizes below " +
                       std::to_string(e.proven_lower_bound()) + " ruled out";
    }
  } else {
    rep.exact_note = "exact confirmation skipped: roughly " +
                     std::to_string(estimate) + "+ subset tests needed at order " +
                     std::to_string(g.vertex_count()) + ", budget is " +
                     std::to_string(exact_budget);
  }
  return rep;
}

}  // namespace edim
