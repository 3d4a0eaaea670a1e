#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edim/graph.hpp"

namespace edim {

/// Parametric graph families with deterministic vertex layouts and labels.
enum class FamilyKind {
  path,             // path:n            n >= 1
  cycle,            // cycle:n           n >= 3
  complete,         // complete:n        n >= 1
  complete_bipartite,  // bipartite:r,t  r, t >= 1
  star,             // star:b            b >= 1 leaves, center first
  wheel,            // wheel:n           cycle of n plus a hub, hub id n
  fan,              // fan:n             path of n plus a hub, hub id n
  grid,             // grid:r,t          r >= t >= 2
  cartesian_product,  // product(A,B)
  torus,            // torus:r,t         cycle sizes, r, t >= 3
  hypercube,        // hypercube:n       n >= 1
  circulant,        // circulant:n,r     n >= 3, 1 <= 2r <= n
  join,             // join(A,B)         every A vertex adjacent to every B vertex
  broom,            // broom:r,n         star with r leaves plus a path handle, order n
  family_f,         // familyF:a,b,c     a >= 1, b >= 2, c >= 0
  g_rn,             // grn:r,n           r >= 2, n >= 2r+2
  g_r,              // gr:r,n            r >= 2, n >= 2r+1
  g_prime,          // gprime:r,t        2 <= r <= t <= 2r-2
  g_double_prime,   // gdprime:r,t       2 <= r <= t <= 2r-2
  figure1,          // figure1           fixed 13-vertex demonstration graph
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  std::vector<long long> params;
  std::vector<FamilySpec> parts;  // two entries for product / join

  /// Parses the one-line grammar above, e.g. "wheel:6", "torus:8,8",
  /// "familyF:3,6,3", "product(path:3,cycle:4)", "figure1".
  static FamilySpec parse(std::string_view text);

  std::string to_string() const;
};

/// A graph together with one unique display label per vertex id.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;

  std::optional<int> find_label(std::string_view label) const;
};

LabeledGraph make_family(const FamilySpec& spec);

/// For 2 <= r <= t <= 2r and t <= n-2, a graph of order n whose metric
/// dimension is r and whose edge metric dimension is t.
LabeledGraph realization_graph(int r, int t, int n);

/// Edge metric generator of size n for the hypercube Q_n: the all-ones
/// vertex plus the n-1 vertices obtained by clearing one of the first n-1
/// coordinates (coordinate i is bit i-1 of the vertex id).
std::vector<int> hypercube_generator(int n);

/// Edge metric generator of size 3 for the torus C_{4r} x C_{4t}
/// (family spec torus:4r,4t): ids of (a_0,b_0), (a_0,b_{2t}), (a_r,b_t).
std::vector<int> torus_generator(int r, int t);

}  // namespace edim
