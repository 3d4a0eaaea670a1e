#include "edim/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace edim {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::empty_graph: return "empty_graph";
    case Errc::self_loop: return "self_loop";
    case Errc::duplicate_edge: return "duplicate_edge";
    case Errc::disconnected: return "disconnected";
    case Errc::invalid_id: return "invalid_id";
    case Errc::not_a_permutation: return "not_a_permutation";
    case Errc::pair_universe_too_large: return "pair_universe_too_large";
    case Errc::parameter_out_of_domain: return "parameter_out_of_domain";
    case Errc::budget_exceeded: return "budget_exceeded";
    case Errc::not_a_tree: return "not_a_tree";
    case Errc::no_known_formula: return "no_known_formula";
    case Errc::wrong_result_kind: return "wrong_result_kind";
    case Errc::parse_error: return "parse_error";
    case Errc::clause_arity: return "clause_arity";
    case Errc::repeated_variable_in_clause: return "repeated_variable_in_clause";
    case Errc::too_many_variables: return "too_many_variables";
    case Errc::not_a_generator: return "not_a_generator";
    case Errc::wrong_cardinality: return "wrong_cardinality";
    case Errc::claim_violation: return "claim_violation";
    case Errc::io_error: return "io_error";
  }
  return "unknown";
}

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
    : n_(vertex_count) {
  if (n_ <= 0) throw Error(Errc::empty_graph, "graph needs at least one vertex");

  edges_.reserve(edge_list.size());
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw Error(Errc::invalid_id, "edge endpoint " + std::to_string(u < 0 || u >= n_ ? u : v) +
                                        " outside 0.." + std::to_string(n_ - 1));
    if (u == v) throw Error(Errc::self_loop, "self loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
  }

  edge_index_.reserve(edges_.size());
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e)
    edge_index_.emplace_back(edges_[e], e);
  std::sort(edge_index_.begin(), edge_index_.end());
  for (std::size_t i = 1; i < edge_index_.size(); ++i)
    if (edge_index_[i - 1].first == edge_index_[i].first) {
      auto [u, v] = edge_index_[i].first;
      throw Error(Errc::duplicate_edge, "duplicate edge (" + std::to_string(u) + ", " +
                                            std::to_string(v) + ")");
    }

  std::vector<int> deg(n_, 0);
  for (auto [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  adj_offsets_.assign(n_ + 1, 0);
  for (int v = 0; v < n_; ++v) adj_offsets_[v + 1] = adj_offsets_[v] + deg[v];
  adj_flat_.resize(adj_offsets_[n_]);
  std::vector<int> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
  for (auto [u, v] : edges_) {
    adj_flat_[cursor[u]++] = v;
    adj_flat_[cursor[v]++] = u;
  }
  for (int v = 0; v < n_; ++v)
    std::sort(adj_flat_.begin() + adj_offsets_[v], adj_flat_.begin() + adj_offsets_[v + 1]);

  std::vector<char> seen(n_, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
  }
  if (reached != n_)
    throw Error(Errc::disconnected, "graph is disconnected (" + std::to_string(reached) +
                                        " of " + std::to_string(n_) + " vertices reachable)");
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw Error(Errc::invalid_id, "vertex id " + std::to_string(v) + " outside 0.." +
                                      std::to_string(n_ - 1));
}

std::pair<int, int> Graph::edge(int e) const {
  if (e < 0 || e >= edge_count())
    throw Error(Errc::invalid_id, "edge id " + std::to_string(e) + " outside 0.." +
                                      std::to_string(edge_count() - 1));
  return edges_[e];
}

std::span<const int> Graph::neighbors(int v) const {
  check_vertex(v);
  return {adj_flat_.data() + adj_offsets_[v],
          static_cast<std::size_t>(adj_offsets_[v + 1] - adj_offsets_[v])};
}

int Graph::degree(int v) const {
  check_vertex(v);
  return adj_offsets_[v + 1] - adj_offsets_[v];
}

std::optional<int> Graph::edge_id(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return std::nullopt;
  if (u > v) std::swap(u, v);
  auto key = std::pair{std::pair{u, v}, -1};
  auto it = std::lower_bound(edge_index_.begin(), edge_index_.end(), key);
  if (it != edge_index_.end() && it->first == std::pair{u, v}) return it->second;
  return std::nullopt;
}

namespace {

void bfs_from(const Graph& g, int source, int* dist) {
  const int n = g.vertex_count();
  std::fill(dist, dist + n, -1);
  dist[source] = 0;
  std::deque<int> queue{source};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
}

void check_anchors(const Graph& g, std::span<const int> anchors) {
  for (int a : anchors) g.check_vertex(a);
}

/// Collisions among representation vectors; returns the lexicographically
/// smallest (i, j) with i < j and rep[i] == rep[j], if any.
std::optional<std::pair<int, int>> smallest_collision(
    const std::vector<std::vector<int>>& reps) {
  std::vector<int> order(reps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (reps[a] != reps[b]) return reps[a] < reps[b];
    return a < b;
  });
  std::optional<std::pair<int, int>> best;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && reps[order[j]] == reps[order[i]]) ++j;
    if (j - i >= 2) {
      // Group members are index-sorted, so its smallest pair is the first two.
      std::pair<int, int> cand{order[i], order[i + 1]};
      if (!best || cand < *best) best = cand;
    }
    i = j;
  }
  return best;
}

}  // namespace

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s) bfs_from(g, s, flat.data() + static_cast<std::size_t>(s) * n);
  return DistanceMatrix(n, std::move(flat));
}

EdgeDistanceTable edge_distance_table(const Graph& g, const DistanceMatrix& dm) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<int> flat(static_cast<std::size_t>(m) * n);
  for (int e = 0; e < m; ++e) {
    auto [u, w] = g.edge(e);
    for (int v = 0; v < n; ++v)
      flat[static_cast<std::size_t>(e) * n + v] = std::min(dm.at(u, v), dm.at(w, v));
  }
  return EdgeDistanceTable(m, n, std::move(flat));
}

std::vector<int> edge_representation(const Graph& g, const EdgeDistanceTable& t,
                                     int edge_id, std::span<const int> anchors) {
  g.edge(edge_id);
  check_anchors(g, anchors);
  std::vector<int> rep;
  rep.reserve(anchors.size());
  for (int a : anchors) rep.push_back(t.at(edge_id, a));
  return rep;
}

std::vector<int> vertex_representation(const Graph& g, const DistanceMatrix& dm,
                                       int vertex_id, std::span<const int> anchors) {
  g.check_vertex(vertex_id);
  check_anchors(g, anchors);
  std::vector<int> rep;
  rep.reserve(anchors.size());
  for (int a : anchors) rep.push_back(dm.at(vertex_id, a));
  return rep;
}

GeneratorCheck is_edge_metric_generator(const Graph& g, std::span<const int> anchors) {
  check_anchors(g, anchors);
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (m < 2) return {true, std::nullopt};

  // One BFS per anchor, not per vertex: enough for every edge distance.
  std::vector<std::vector<int>> from_anchor(anchors.size(), std::vector<int>(n));
  for (std::size_t k = 0; k < anchors.size(); ++k)
    bfs_from(g, anchors[k], from_anchor[k].data());

  std::vector<std::vector<int>> reps(m, std::vector<int>(anchors.size()));
  for (int e = 0; e < m; ++e) {
    auto [u, w] = g.edge(e);
    for (std::size_t k = 0; k < anchors.size(); ++k)
      reps[e][k] = std::min(from_anchor[k][u], from_anchor[k][w]);
  }
  auto collision = smallest_collision(reps);
  if (collision) return {false, collision};
  return {true, std::nullopt};
}

GeneratorCheck is_metric_generator(const Graph& g, std::span<const int> anchors) {
  check_anchors(g, anchors);
  const int n = g.vertex_count();
  if (n < 2) return {true, std::nullopt};

  std::vector<std::vector<int>> from_anchor(anchors.size(), std::vector<int>(n));
  for (std::size_t k = 0; k < anchors.size(); ++k)
    bfs_from(g, anchors[k], from_anchor[k].data());

  std::vector<std::vector<int>> reps(n, std::vector<int>(anchors.size()));
  for (int v = 0; v < n; ++v)
    for (std::size_t k = 0; k < anchors.size(); ++k) reps[v][k] = from_anchor[k][v];
  auto collision = smallest_collision(reps);
  if (collision) return {false, collision};
  return {true, std::nullopt};
}

std::size_t pair_index(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; }

std::size_t pair_count(std::size_t m) { return m * (m - 1) / 2; }

PairCoverage distinguished_pairs(const Graph& g, int v, const EdgeDistanceTable& t,
                                 int max_edges) {
  g.check_vertex(v);
  const int m = g.edge_count();
  if (m > max_edges)
    throw Error(Errc::pair_universe_too_large,
                "pair coverage over " + std::to_string(m) + " edges exceeds the limit of " +
                    std::to_string(max_edges));
  PairCoverage cov{v, Bitset(pair_count(m))};
  for (int j = 1; j < m; ++j) {
    const int dj = t.at(j, v);
    for (int i = 0; i < j; ++i)
      if (t.at(i, v) != dj) cov.covered.set(pair_index(i, j));
  }
  return cov;
}

GraphStats graph_stats(const Graph& g) {
  const int n = g.vertex_count();
  GraphStats stats;
  DistanceMatrix dm = all_pairs_distances(g);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) stats.diameter = std::max(stats.diameter, dm.at(u, v));
  for (int v = 0; v < n; ++v) stats.max_degree = std::max(stats.max_degree, g.degree(v));
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) ++stats.universal_vertex_count;

  stats.all_pairs_share_neighbor = true;
  for (int u = 0; u < n && stats.all_pairs_share_neighbor; ++u)
    for (int v = u + 1; v < n && stats.all_pairs_share_neighbor; ++v) {
      bool share = false;
      for (int w : g.neighbors(u))
        if (w != v && dm.at(w, v) == 1) {
          share = true;
          break;
        }
      if (!share) stats.all_pairs_share_neighbor = false;
    }
  return stats;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n)
    throw Error(Errc::not_a_permutation, "permutation has " + std::to_string(perm.size()) +
                                             " entries for " + std::to_string(n) + " vertices");
  std::vector<char> hit(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[p])
      throw Error(Errc::not_a_permutation, "not a permutation of 0.." + std::to_string(n - 1));
    hit[p] = 1;
  }
  std::vector<std::pair<int, int>> mapped;
  mapped.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) mapped.emplace_back(perm[u], perm[v]);
  return Graph(n, std::move(mapped));
}

}  // namespace edim
