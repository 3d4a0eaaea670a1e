#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "edim/bitset.hpp"
#include "edim/error.hpp"

namespace edim {

/// Simple, connected, undirected graph over dense vertex ids 0..n-1.
/// Edges keep their input order as ids 0..m-1; each stored endpoint pair is
/// canonicalised to u < v. Construction validates simplicity and connectivity.
class Graph {
 public:
  Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

  /// Endpoints (u, v) with u < v. Throws invalid_id for a bad edge id.
  std::pair<int, int> edge(int e) const;

  /// Sorted neighbour list. Throws invalid_id for a bad vertex id.
  std::span<const int> neighbors(int v) const;

  int degree(int v) const;

  std::optional<int> edge_id(int u, int v) const;

  void check_vertex(int v) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> adj_flat_;
  std::vector<int> adj_offsets_;
  std::vector<std::pair<std::pair<int, int>, int>> edge_index_;  // sorted by pair
};

/// Hop distances between all vertex pairs, from one BFS per vertex.
class DistanceMatrix {
 public:
  DistanceMatrix(int n, std::vector<int> flat) : n_(n), d_(std::move(flat)) {}

  int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  int vertex_count() const noexcept { return n_; }

 private:
  int n_;
  std::vector<int> d_;  // n*n
};

DistanceMatrix all_pairs_distances(const Graph& g);

/// d(e, v) = min over the endpoints of e of their distance to v.
class EdgeDistanceTable {
 public:
  EdgeDistanceTable(int m, int n, std::vector<int> flat)
      : m_(m), n_(n), d_(std::move(flat)) {}

  int at(int e, int v) const { return d_[static_cast<std::size_t>(e) * n_ + v]; }
  int edge_count() const noexcept { return m_; }
  int vertex_count() const noexcept { return n_; }

 private:
  int m_;
  int n_;
  std::vector<int> d_;  // m*n
};

EdgeDistanceTable edge_distance_table(const Graph& g, const DistanceMatrix& dm);

/// Distance vector of one edge (resp. vertex) against an ordered anchor set.
std::vector<int> edge_representation(const Graph& g, const EdgeDistanceTable& t,
                                     int edge_id, std::span<const int> anchors);
std::vector<int> vertex_representation(const Graph& g, const DistanceMatrix& dm,
                                       int vertex_id, std::span<const int> anchors);

/// Outcome of a generator test. When ok is false, witness holds the
/// lexicographically smallest pair of ids sharing a representation
/// (edge ids for the edge test, vertex ids for the vertex test).
struct GeneratorCheck {
  bool ok = false;
  std::optional<std::pair<int, int>> witness;
};

GeneratorCheck is_edge_metric_generator(const Graph& g, std::span<const int> anchors);
GeneratorCheck is_metric_generator(const Graph& g, std::span<const int> anchors);

/// Unordered pairs over ids 0..m-1 laid out at index j*(j-1)/2 + i for i < j.
std::size_t pair_index(std::size_t i, std::size_t j);
std::size_t pair_count(std::size_t m);

/// Pair universes are quadratic in the edge count; refuse construction past
/// this many edges unless the caller raises the limit explicitly.
inline constexpr int kMaxPairCoverageEdges = 1 << 15;

/// Edge pairs told apart by one vertex: bit pair_index(i, j) is set iff
/// d(e_i, owner) != d(e_j, owner).
struct PairCoverage {
  int owner = -1;
  Bitset covered;
};

PairCoverage distinguished_pairs(const Graph& g, int v, const EdgeDistanceTable& t,
                                 int max_edges = kMaxPairCoverageEdges);

struct GraphStats {
  int diameter = 0;
  int max_degree = 0;
  int universal_vertex_count = 0;  // vertices adjacent to every other vertex
  bool all_pairs_share_neighbor = false;
};

GraphStats graph_stats(const Graph& g);

/// Rebuilds the graph with vertex v renamed to perm[v]. Edge ids keep their
/// order; endpoint pairs are re-canonicalised.
Graph relabel(const Graph& g, std::span<const int> perm);

}  // namespace edim
