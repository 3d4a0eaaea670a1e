#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "edim/graph.hpp"
#include "oracles.hpp"

using namespace edim;

namespace {

Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }

Graph cycle4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  REQUIRE(false);
  return Errc::io_error;
}

}  // namespace

TEST_CASE("construction validates the input") {
  CHECK(code_of([] { Graph(0, {}); }) == Errc::empty_graph);
  CHECK(code_of([] { Graph(2, {{0, 0}}); }) == Errc::self_loop);
  CHECK(code_of([] { Graph(2, {{0, 1}, {1, 0}}); }) == Errc::duplicate_edge);
  CHECK(code_of([] { Graph(3, {{0, 1}}); }) == Errc::disconnected);
  CHECK(code_of([] { Graph(2, {{0, 2}}); }) == Errc::invalid_id);
  CHECK(code_of([] { Graph(2, {{-1, 1}}); }) == Errc::invalid_id);
  CHECK_NOTHROW(Graph(1, {}));
}

TEST_CASE("edges keep input order with canonical endpoints") {
  const Graph g(4, {{2, 1}, {3, 0}, {1, 0}, {3, 2}});
  CHECK(g.edge_count() == 4);
  CHECK(g.edge(0) == std::pair<int, int>{1, 2});
  CHECK(g.edge(1) == std::pair<int, int>{0, 3});
  CHECK(g.edge_id(1, 2) == 0);
  CHECK(g.edge_id(2, 1) == 0);
  CHECK(g.edge_id(0, 2) == std::nullopt);
  CHECK(code_of([&] { (void)g.edge(4); }) == Errc::invalid_id);
  CHECK(code_of([&] { (void)g.neighbors(-1); }) == Errc::invalid_id);

  const auto nb = g.neighbors(3);
  CHECK(std::vector<int>(nb.begin(), nb.end()) == std::vector<int>{0, 2});
  CHECK(g.degree(0) == 2);
}

TEST_CASE("distances agree with Floyd-Warshall on random graphs") {
  std::mt19937 rng(12345);
  for (int round = 0; round < 40; ++round) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = oracles::random_connected_graph(rng, n, 0.3);
    const DistanceMatrix dm = all_pairs_distances(g);
    const auto ref = oracles::fw_distances(g);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        CHECK(dm.at(u, v) == ref[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);

    const EdgeDistanceTable t = edge_distance_table(g, dm);
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto [a, b] = g.edge(e);
      for (int v = 0; v < n; ++v)
        CHECK(t.at(e, v) == std::min(dm.at(a, v), dm.at(b, v)));
    }
  }
}

TEST_CASE("representations read distances against anchor order") {
  const Graph g = path3();
  const DistanceMatrix dm = all_pairs_distances(g);
  const EdgeDistanceTable t = edge_distance_table(g, dm);
  const std::vector<int> anchors = {2, 0};
  CHECK(vertex_representation(g, dm, 0, anchors) == std::vector<int>{2, 0});
  CHECK(edge_representation(g, t, 0, anchors) == std::vector<int>{1, 0});
  CHECK(edge_representation(g, t, 1, anchors) == std::vector<int>{0, 1});
}

TEST_CASE("generator checks match the definition and report lex-first witnesses") {
  const Graph g = path3();
  const GeneratorCheck one_end = is_edge_metric_generator(g, std::vector<int>{0});
  CHECK(one_end.ok);

  const GeneratorCheck middle = is_edge_metric_generator(g, std::vector<int>{1});
  CHECK_FALSE(middle.ok);
  REQUIRE(middle.witness.has_value());
  CHECK(*middle.witness == std::pair<int, int>{0, 1});

  const GeneratorCheck empty = is_edge_metric_generator(g, std::vector<int>{});
  CHECK_FALSE(empty.ok);

  const GeneratorCheck vertex_mid = is_metric_generator(g, std::vector<int>{1});
  CHECK_FALSE(vertex_mid.ok);
  REQUIRE(vertex_mid.witness.has_value());
  CHECK(*vertex_mid.witness == std::pair<int, int>{0, 2});

  CHECK(is_metric_generator(g, std::vector<int>{0}).ok);

  std::mt19937 rng(99);
  for (int round = 0; round < 60; ++round) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph h = oracles::random_connected_graph(rng, n, 0.4);
    std::vector<int> anchors;
    for (int v = 0; v < n; ++v)
      if (rng() % 2) anchors.push_back(v);
    if (anchors.empty()) anchors.push_back(0);
    CHECK(is_edge_metric_generator(h, anchors).ok ==
          oracles::naive_is_generator(h, anchors, true));
    CHECK(is_metric_generator(h, anchors).ok ==
          oracles::naive_is_generator(h, anchors, false));
  }
}

TEST_CASE("pair indexing is a bijection") {
  const std::size_t m = 9;
  std::vector<bool> hit(pair_count(m), false);
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const std::size_t idx = pair_index(i, j);
      REQUIRE(idx < hit.size());
      CHECK_FALSE(hit[idx]);
      hit[idx] = true;
    }
  CHECK(std::count(hit.begin(), hit.end(), true) == static_cast<long>(pair_count(m)));
}

TEST_CASE("distinguished_pairs marks exactly the separated edge pairs") {
  const Graph g = cycle4();
  const DistanceMatrix dm = all_pairs_distances(g);
  const EdgeDistanceTable t = edge_distance_table(g, dm);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const PairCoverage cov = distinguished_pairs(g, v, t);
    CHECK(cov.owner == v);
    CHECK(cov.covered.size() == pair_count(static_cast<std::size_t>(g.edge_count())));
    for (int j = 1; j < g.edge_count(); ++j)
      for (int i = 0; i < j; ++i)
        CHECK(cov.covered.test(pair_index(static_cast<std::size_t>(i),
                                          static_cast<std::size_t>(j))) ==
              (t.at(i, v) != t.at(j, v)));
  }
  CHECK(code_of([&] {
          distinguished_pairs(g, 0, t, 2);
        }) == Errc::pair_universe_too_large);
}

TEST_CASE("graph_stats reports diameter, degrees and neighborhood facts") {
  const GraphStats k4 = graph_stats(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  CHECK(k4.diameter == 1);
  CHECK(k4.max_degree == 3);
  CHECK(k4.universal_vertex_count == 4);
  CHECK(k4.all_pairs_share_neighbor);

  const GraphStats p3 = graph_stats(path3());
  CHECK(p3.diameter == 2);
  CHECK(p3.max_degree == 2);
  CHECK(p3.universal_vertex_count == 1);
  CHECK_FALSE(p3.all_pairs_share_neighbor);

  const GraphStats c4 = graph_stats(cycle4());
  CHECK(c4.diameter == 2);
  CHECK(c4.universal_vertex_count == 0);
  // adjacent vertices of a 4-cycle have no third vertex next to both
  CHECK_FALSE(c4.all_pairs_share_neighbor);
}

TEST_CASE("relabel permutes ids and preserves structure") {
  const Graph g = path3();
  const std::vector<int> perm = {2, 0, 1};  // old id v becomes perm[v]
  const Graph h = relabel(g, perm);
  CHECK(h.vertex_count() == 3);
  CHECK(h.edge_count() == 2);
  CHECK(h.edge(0) == std::pair<int, int>{0, 2});
  CHECK(h.edge(1) == std::pair<int, int>{0, 1});

  CHECK(code_of([&] { relabel(g, std::vector<int>{0, 0, 1}); }) ==
        Errc::not_a_permutation);
  CHECK(code_of([&] { relabel(g, std::vector<int>{0, 1}); }) == Errc::not_a_permutation);

  std::mt19937 rng(7);
  for (int round = 0; round < 20; ++round) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Graph a = oracles::random_connected_graph(rng, n, 0.35);
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) p[static_cast<std::size_t>(v)] = v;
    std::shuffle(p.begin(), p.end(), rng);
    const Graph b = relabel(a, p);
    const DistanceMatrix da = all_pairs_distances(a);
    const DistanceMatrix db = all_pairs_distances(b);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        CHECK(da.at(u, v) == db.at(p[static_cast<std::size_t>(u)],
                                   p[static_cast<std::size_t>(v)]));
  }
}
