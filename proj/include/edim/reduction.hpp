#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edim/families.hpp"
#include "edim/solvers.hpp"

namespace edim {

/// 3-CNF formula: every clause holds exactly three literals over three
/// distinct variables. A literal is a signed 1-based variable index.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;
};

/// DIMACS CNF reader ("c" comments, "p cnf <vars> <clauses>" header, clauses
/// terminated by 0). Errors carry the offending line number.
CnfFormula parse_cnf(std::istream& in);
CnfFormula parse_cnf_text(const std::string& text);

/// The clause-to-graph instance: one 6-vertex block per variable (order
/// T, F, a1, a2, b1, b2), then one 10-vertex block per clause (c1..c10),
/// wired by communication, neutralizing and correcting edges. The instance
/// has an edge metric generator of size r = 2m+n iff the formula is
/// satisfiable.
struct ReductionInstance {
  LabeledGraph graph;
  int num_vars = 0;
  int num_clauses = 0;
  int r = 0;

  // Role accessors; i, j are 1-based like the formula, k indexes the
  // superscript (a/b: 1..2, c: 1..10).
  int t_vertex(int i) const { return 6 * (i - 1); }
  int f_vertex(int i) const { return 6 * (i - 1) + 1; }
  int a_vertex(int i, int k) const { return 6 * (i - 1) + 1 + k; }
  int b_vertex(int i, int k) const { return 6 * (i - 1) + 3 + k; }
  int c_vertex(int j, int k) const { return 6 * num_vars + 10 * (j - 1) + k - 1; }
};

ReductionInstance build_reduction(const CnfFormula& f);

struct Assignment {
  std::vector<bool> values;  // values[i-1] is variable i

  bool value(int i) const { return values[static_cast<std::size_t>(i) - 1]; }
};

bool satisfies(const CnfFormula& f, const Assignment& a);

/// First satisfying assignment in bit-pattern order (variable 1 is the lowest
/// bit), or nullopt. Requires num_vars <= 25 (TooManyVariables otherwise).
std::optional<Assignment> brute_force_sat(const CnfFormula& f);

/// S = {c_j6, c_j9 for every clause} + {a_i1 if true else b_i1 per variable};
/// an edge metric generator of size r whenever the assignment satisfies f.
std::vector<int> generator_from_assignment(const ReductionInstance& inst,
                                           const Assignment& a);

/// Reads the truth assignment back out of a size-r generator: the member of
/// each variable block decides the value (a-side true, b-side false).
/// Checks, in order: |S| = r (WrongCardinality), one pick per private vertex
/// family (ClaimViolation), then the generator property (NotAGenerator).
Assignment assignment_from_generator(const ReductionInstance& inst,
                                     std::span<const int> generator);

struct ReductionReport {
  int num_vars = 0;
  int num_clauses = 0;
  int order = 0;
  int edge_total = 0;
  int r = 0;

  /// Per-variable and per-clause edge pairs are distinguished only by their
  /// private vertex sets, which are pairwise disjoint; verified on the built
  /// graph, this certifies edim >= r.
  bool structural_lower_bound_holds = false;

  bool satisfiable = false;
  bool generator_verified = false;    // satisfiable: derived set verifies
  bool round_trip_satisfies = false;  // satisfiable: recovered assignment works

  bool unsat_sweep_done = false;          // unsatisfiable, num_vars <= 16
  long long assignment_sets_tried = 0;    // 2^n when the sweep ran
  long long assignment_sets_failed = 0;   // must equal tried

  bool exact_attempted = false;
  bool exact_confirms_gap = false;  // exact search certified edim > r
  std::string exact_note;

  /// Everything that was checked came out as the reduction promises.
  bool ok() const;
};

/// Structural lower bound + satisfiability-direction checks, with an exact
/// search for the unsatisfiable direction only when the subset-count estimate
/// fits the budget.
ReductionReport verify_reduction(const CnfFormula& f,
                                 long long exact_budget = kDefaultSubsetBudget);

}  // namespace edim
