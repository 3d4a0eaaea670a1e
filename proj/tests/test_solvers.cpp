#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "edim/families.hpp"
#include "edim/graph.hpp"
#include "edim/solvers.hpp"
#include "oracles.hpp"

using namespace edim;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  REQUIRE(false);
  return Errc::io_error;
}

Graph make(const std::string& text) {
  return make_family(FamilySpec::parse(text)).graph;
}

double harmonic(long long k) {
  double h = 0.0;
  for (long long i = 1; i <= k; ++i) h += 1.0 / static_cast<double>(i);
  return h;
}

}  // namespace

TEST_CASE("exact solver nails small closed-form cases") {
  CHECK(exact_dimension(make("path:2"), DimensionKind::edge).value == 1);
  CHECK(exact_dimension(make("path:7"), DimensionKind::edge).value == 1);
  CHECK(exact_dimension(make("cycle:5"), DimensionKind::edge).value == 2);
  CHECK(exact_dimension(make("complete:4"), DimensionKind::edge).value == 3);
  CHECK(exact_dimension(make("complete:4"), DimensionKind::vertex).value == 3);
  CHECK(exact_dimension(make("bipartite:2,3"), DimensionKind::edge).value == 3);
  CHECK(exact_dimension(make("star:4"), DimensionKind::edge).value == 3);
  CHECK(exact_dimension(make("path:2"), DimensionKind::vertex).value == 1);

  const SolveResult res = exact_dimension(make("cycle:4"), DimensionKind::edge);
  CHECK(res.value == 2);
  CHECK(res.witness == std::vector<int>{0, 1});  // lexicographically first
  CHECK(res.kind == DimensionKind::edge);
  CHECK(res.method == SolveMethod::exact);
  CHECK(res.explored >= 1);

  CHECK(code_of([] { exact_dimension(Graph(1, {}), DimensionKind::edge); }) ==
        Errc::parameter_out_of_domain);
  CHECK(code_of([] { exact_dimension(make("cycle:4"), DimensionKind::edge, 0); }) ==
        Errc::parameter_out_of_domain);
}

TEST_CASE("budget counts subset tests and proves a lower bound") {
  try {
    exact_dimension(make("complete:6"), DimensionKind::edge, 3);
    REQUIRE(false);
  } catch (const BudgetExceeded& e) {
    CHECK(e.code() == Errc::budget_exceeded);
    CHECK(e.explored() == 3);
    CHECK(e.proven_lower_bound() == 3);
  }
  // generous budget solves the same instance
  CHECK(exact_dimension(make("complete:6"), DimensionKind::edge).value == 5);
}

TEST_CASE("greedy covers all edge pairs and approximates") {
  const SolveResult trivial = greedy_edim(make("path:2"));
  CHECK(trivial.value == 1);
  CHECK(trivial.witness == std::vector<int>{0});
  CHECK(trivial.method == SolveMethod::greedy);

  std::mt19937 rng(2024);
  for (int round = 0; round < 40; ++round) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = oracles::random_connected_graph(rng, n, 0.4);
    const SolveResult greedy = greedy_edim(g);
    CHECK(is_edge_metric_generator(g, greedy.witness).ok);
    CHECK(std::is_sorted(greedy.witness.begin(), greedy.witness.end()));
    CHECK(greedy.value == static_cast<int>(greedy.witness.size()));

    const int exact = exact_dimension(g, DimensionKind::edge).value;
    const long long pairs =
        static_cast<long long>(pair_count(static_cast<std::size_t>(g.edge_count())));
    CHECK(exact <= greedy.value);
    CHECK(static_cast<double>(greedy.value) <=
          static_cast<double>(exact) * std::max(1.0, harmonic(pairs)) + 1e-9);
  }
}

TEST_CASE("tree formula matches structure and exact search") {
  const SolveResult path = tree_edim(make("path:6"));
  CHECK(path.value == 1);
  CHECK(path.witness == std::vector<int>{0});
  CHECK(path.method == SolveMethod::tree_formula);

  const SolveResult star = tree_edim(make("star:4"));
  CHECK(star.value == 3);
  CHECK(star.witness == std::vector<int>{2, 3, 4});

  const SolveResult broom = tree_edim(make("broom:3,7"));
  CHECK(broom.value == 3);
  CHECK(broom.witness == std::vector<int>{4, 5, 6});

  CHECK(code_of([] { tree_edim(make("cycle:4")); }) == Errc::not_a_tree);
  CHECK(code_of([] { tree_edim(make("complete:4")); }) == Errc::not_a_tree);

  std::mt19937 rng(515);
  for (int round = 0; round < 60; ++round) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const Graph t = oracles::random_tree(rng, n);
    const SolveResult res = tree_edim(t);
    CHECK(res.value == oracles::tree_value_by_leaf_walks(t));
    CHECK(is_edge_metric_generator(t, res.witness).ok);
    CHECK(is_metric_generator(t, res.witness).ok);
    if (n <= 9) {
      CHECK(res.value == exact_dimension(t, DimensionKind::edge).value);
      CHECK(res.value == exact_dimension(t, DimensionKind::vertex).value);
    }
  }
}

TEST_CASE("closed formulas reproduce the published table") {
  auto formula = [](const std::string& text, DimensionKind kind) {
    return closed_formula(FamilySpec::parse(text), kind);
  };
  const DimensionKind E = DimensionKind::edge;
  const DimensionKind V = DimensionKind::vertex;

  CHECK(formula("path:6", E) == 1);
  CHECK(formula("path:6", V) == 1);
  CHECK(formula("cycle:9", E) == 2);
  CHECK(formula("complete:7", E) == 6);
  CHECK(formula("bipartite:3,4", E) == 5);
  CHECK(formula("bipartite:1,1", E) == 1);
  CHECK(formula("bipartite:1,4", V) == 3);
  CHECK(formula("star:5", E) == 4);
  CHECK(formula("star:1", E) == 1);

  CHECK(formula("wheel:3", E) == 3);
  CHECK(formula("wheel:4", E) == 4);
  CHECK(formula("wheel:5", E) == 4);
  CHECK(formula("wheel:9", E) == 8);
  CHECK(formula("wheel:3", V) == 3);
  CHECK(formula("wheel:4", V) == 2);
  CHECK(formula("wheel:5", V) == 2);
  CHECK(formula("wheel:6", V) == 3);
  CHECK(formula("wheel:7", V) == 3);
  CHECK(formula("wheel:12", V) == 5);

  CHECK(formula("fan:1", E) == 1);
  CHECK(formula("fan:2", E) == 2);
  CHECK(formula("fan:3", E) == 3);
  CHECK(formula("fan:4", E) == 3);
  CHECK(formula("fan:9", E) == 8);
  CHECK(formula("fan:1", V) == 1);
  CHECK(formula("fan:3", V) == 2);
  CHECK(formula("fan:4", V) == 2);
  CHECK(formula("fan:6", V) == 3);
  CHECK(formula("fan:11", V) == 4);

  CHECK(formula("grid:5,3", E) == 2);
  CHECK(formula("grid:5,3", V) == 2);
  CHECK(formula("torus:4,4", V) == 4);
  CHECK(formula("torus:3,3", V) == 3);
  CHECK(formula("torus:3,4", V) == 4);
  CHECK(formula("torus:4,8", E) == 3);
  CHECK(formula("broom:3,7", E) == 3);
  CHECK(formula("broom:3,7", V) == 3);
  CHECK(formula("familyF:2,3,1", V) == 4);
  CHECK(formula("familyF:2,3,1", E) == 5);

  CHECK(code_of([&] { formula("torus:3,4", E); }) == Errc::no_known_formula);
  CHECK(code_of([&] { formula("torus:8,6", E); }) == Errc::no_known_formula);
  CHECK(code_of([&] { formula("hypercube:4", E); }) == Errc::no_known_formula);
  CHECK(code_of([&] { formula("circulant:6,2", E); }) == Errc::no_known_formula);
  CHECK(code_of([&] { formula("grn:2,6", E); }) == Errc::no_known_formula);
  CHECK(code_of([&] { formula("figure1", V); }) == Errc::no_known_formula);
  CHECK(code_of([&] { formula("product(path:3,path:3)", E); }) ==
        Errc::no_known_formula);
}

TEST_CASE("formula values agree with exact search on a spot grid") {
  auto both = [](const std::string& text) {
    const FamilySpec spec = FamilySpec::parse(text);
    const Graph g = make_family(spec).graph;
    CHECK(closed_formula(spec, DimensionKind::edge) ==
          exact_dimension(g, DimensionKind::edge).value);
    CHECK(closed_formula(spec, DimensionKind::vertex) ==
          exact_dimension(g, DimensionKind::vertex).value);
  };
  for (const std::string text :
       {"path:5", "cycle:6", "complete:5", "bipartite:2,3", "star:4", "wheel:5",
        "wheel:6", "fan:4", "fan:6", "grid:4,3", "broom:2,5", "familyF:1,2,0"})
    both(text);
}

TEST_CASE("enumerate_bases lists generating sets in lexicographic order") {
  const Graph c4 = make("cycle:4");
  const std::vector<std::vector<int>> vertex_bases =
      enumerate_bases(c4, DimensionKind::vertex, 2);
  CHECK(vertex_bases ==
        std::vector<std::vector<int>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  const std::vector<std::vector<int>> edge_bases =
      enumerate_bases(c4, DimensionKind::edge, 2);
  CHECK(edge_bases == std::vector<std::vector<int>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

  const Graph p2 = make("path:2");
  CHECK(enumerate_bases(p2, DimensionKind::edge, 1) ==
        std::vector<std::vector<int>>{{0}, {1}});
  CHECK(enumerate_bases(p2, DimensionKind::edge, 3).empty());
  CHECK(code_of([&] { enumerate_bases(p2, DimensionKind::edge, 0); }) ==
        Errc::parameter_out_of_domain);
}

TEST_CASE("bound checks accept exact edge results and verify the suite") {
  const Graph k4 = make("complete:4");
  const SolveResult k4res = exact_dimension(k4, DimensionKind::edge);
  const BoundsReport k4b = check_bounds(k4, k4res);
  CHECK(k4b.value == 3);
  CHECK(k4b.diameter == 1);
  CHECK(k4b.max_degree == 3);
  CHECK(k4b.log_delta_lower == 2);
  CHECK(k4b.trivial_bounds == std::pair<int, int>{1, 3});
  CHECK(k4b.edge_count_bound_holds);
  CHECK(k4b.basis_degree_bound_holds);
  CHECK(k4b.universal_vertex_implication == UniversalVertexImplication::two_universal_holds);
  CHECK(k4b.common_neighbor_condition);
  CHECK(k4b.all_hold());

  const Graph p2 = make("path:2");
  const BoundsReport p2b = check_bounds(p2, exact_dimension(p2, DimensionKind::edge));
  CHECK(p2b.all_hold());  // the n-1 case without any third vertex

  const Graph w6 = make("wheel:6");
  const BoundsReport w6b = check_bounds(w6, exact_dimension(w6, DimensionKind::edge));
  CHECK(w6b.value == 5);
  CHECK(w6b.universal_vertex_implication == UniversalVertexImplication::one_universal_holds);
  CHECK(w6b.all_hold());

  const Graph c6 = make("cycle:6");
  const BoundsReport c6b = check_bounds(c6, exact_dimension(c6, DimensionKind::edge));
  CHECK(c6b.universal_vertex_implication == UniversalVertexImplication::no_universal_vertex);
  CHECK(c6b.all_hold());

  CHECK(code_of([&] { check_bounds(k4, greedy_edim(k4)); }) == Errc::wrong_result_kind);
  CHECK(code_of([&] {
          check_bounds(k4, exact_dimension(k4, DimensionKind::vertex));
        }) == Errc::wrong_result_kind);
}

TEST_CASE("exact solver equals brute force on random graphs") {
  std::mt19937 rng(31337);
  for (int round = 0; round < 60; ++round) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Graph g = oracles::random_connected_graph(rng, n, 0.45);
    CHECK(exact_dimension(g, DimensionKind::edge).value ==
          oracles::naive_dimension(g, true));
    CHECK(exact_dimension(g, DimensionKind::vertex).value ==
          oracles::naive_dimension(g, false));
  }
}
