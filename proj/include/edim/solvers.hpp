#pragma once

#include <utility>
#include <vector>

#include "edim/families.hpp"
#include "edim/graph.hpp"

namespace edim {

enum class DimensionKind { vertex, edge };
enum class SolveMethod { exact, greedy, tree_formula, closed_formula };

const char* dimension_kind_name(DimensionKind kind);
const char* solve_method_name(SolveMethod method);

/// Outcome of a dimension computation. `witness` is a sorted vertex set that
/// achieves `value` (empty for closed_formula, which yields the value only);
/// `explored` counts candidate subsets tested (exact search only).
struct SolveResult {
  int value = 0;
  std::vector<int> witness;
  DimensionKind kind = DimensionKind::edge;
  SolveMethod method = SolveMethod::exact;
  long long explored = 0;
};

/// Default cap on subsets the exact search may test before giving up.
inline constexpr long long kDefaultSubsetBudget = 50'000'000;

/// Thrown when exact search hits its subset budget. All subset sizes below
/// `proven_lower_bound()` were exhausted without success, so the dimension is
/// at least that large.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(long long explored, int proven_lower_bound);
  long long explored() const { return explored_; }
  int proven_lower_bound() const { return proven_lower_bound_; }

 private:
  long long explored_;
  int proven_lower_bound_;
};

/// True dim (kind=vertex) or edim (kind=edge) by cardinality-ascending
/// lexicographic subset search over pair-coverage bit sets. The first subset
/// that covers every pair wins, so the witness is the lexicographically first
/// optimal set.
SolveResult exact_dimension(const Graph& g, DimensionKind kind,
                            long long budget = kDefaultSubsetBudget);

/// Greedy set cover over the C(m,2) edge pairs: each round picks the vertex
/// covering the most still-uncovered pairs (ties to the lowest id). Result is
/// a verified edge metric generator within a factor H(C(m,2)) of optimal.
SolveResult greedy_edim(const Graph& g);

/// Edge metric dimension of a tree via the leg-count formula, with the
/// all-but-one-leaf-per-leg witness. Paths give value 1 with the lowest leaf.
SolveResult tree_edim(const Graph& g);

/// Known closed-form value for the given family instance, or NoKnownFormula.
int closed_formula(const FamilySpec& spec, DimensionKind kind);

/// All vertex subsets of the given size that verify as generators of the
/// requested kind, in lexicographic order. Uses the representation-level
/// predicates, independent of the bit-set search kernel.
std::vector<std::vector<int>> enumerate_bases(const Graph& g, DimensionKind kind,
                                              int size);

enum class UniversalVertexImplication {
  no_universal_vertex,
  one_universal_holds,      // value is n-2 or n-1 as required
  one_universal_violated,
  two_universal_holds,      // value is n-1 as required
  two_universal_violated,
};

const char* universal_vertex_implication_name(UniversalVertexImplication u);

/// Consistency report of an exact edge result against the general bounds:
/// ceil(log2 max_degree) below, n-1 above, the (D+1)^k edge-count cap, the
/// 2^(k-1) witness degree cap, the universal-vertex implications, and the
/// shared-neighbor necessary condition for value = n-1.
struct BoundsReport {
  int value = 0;
  int vertex_count = 0;
  int diameter = 0;
  int max_degree = 0;
  int log_delta_lower = 0;
  std::pair<int, int> trivial_bounds;
  bool edge_count_bound_holds = false;
  bool basis_degree_bound_holds = false;
  UniversalVertexImplication universal_vertex_implication =
      UniversalVertexImplication::no_universal_vertex;
  bool common_neighbor_condition = false;

  bool all_hold() const;
};

/// Requires res to be an Exact Edge result for g (WrongResultKind otherwise).
BoundsReport check_bounds(const Graph& g, const SolveResult& res);

}  // namespace edim
