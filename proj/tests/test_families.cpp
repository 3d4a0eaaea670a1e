#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "edim/families.hpp"
#include "edim/graph.hpp"

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

LabeledGraph make(const std::string& text) { return make_family(FamilySpec::parse(text)); }

void check_shape(const std::string& text, int vertices, int edges) {
  CAPTURE(text);
  const LabeledGraph lg = make(text);
  CHECK(lg.graph.vertex_count() == vertices);
  CHECK(lg.graph.edge_count() == edges);
  CHECK(lg.labels.size() == static_cast<std::size_t>(vertices));
  const std::set<std::string> unique(lg.labels.begin(), lg.labels.end());
  CHECK(unique.size() == lg.labels.size());
}

}  // namespace

TEST_CASE("spec grammar round-trips through to_string") {
  for (const std::string text :
       {"path:4", "cycle:5", "complete:3", "bipartite:2,3", "star:4", "wheel:6",
        "fan:5", "grid:3,2", "product(path:3,cycle:4)", "torus:4,8", "hypercube:4",
        "circulant:6,2", "join(path:2,path:2)", "broom:3,7", "familyF:2,3,1",
        "grn:2,6", "gr:2,5", "gprime:4,6", "gdprime:3,4", "figure1",
        "product(join(path:1,path:2),cycle:3)"}) {
    CAPTURE(text);
    CHECK(FamilySpec::parse(text).to_string() == text);
  }
  CHECK(FamilySpec::parse("  wheel:6 ").to_string() == "wheel:6");
}

TEST_CASE("spec grammar rejects malformed input") {
  for (const std::string text :
       {"", "nonsense:3", "path", "path:", "path:2,3", "path:2x", "grid:4",
        "figure1:1", "product(path:3)", "product:3,4", "product(path:3,cycle:4",
        "join(path:2,path:2,path:2)", "path:99999999999999999999"}) {
    CAPTURE(text);
    CHECK(code_of([&] { FamilySpec::parse(text); }) == Errc::parse_error);
  }
}

TEST_CASE("parameter domains are enforced") {
  for (const std::string text :
       {"path:0", "cycle:2", "complete:0", "bipartite:0,1", "star:0", "wheel:2",
        "fan:0", "grid:2,3", "grid:1,1", "torus:2,4", "hypercube:0", "hypercube:21",
        "circulant:5,3", "circulant:3,0", "broom:4,5", "broom:1,4", "familyF:0,2,0",
        "familyF:1,1,0", "familyF:1,2,-1", "grn:1,4", "grn:2,5", "gr:2,4",
        "gprime:2,3", "gprime:1,1", "gdprime:3,2", "gdprime:2,5", "path:-3"}) {
    CAPTURE(text);
    CHECK(code_of([&] { make(text); }) == Errc::parameter_out_of_domain);
  }
}

TEST_CASE("family shapes: order and size") {
  check_shape("path:1", 1, 0);
  check_shape("path:5", 5, 4);
  check_shape("cycle:6", 6, 6);
  check_shape("complete:5", 5, 10);
  check_shape("bipartite:2,3", 5, 6);
  check_shape("star:4", 5, 4);
  check_shape("wheel:6", 7, 12);
  check_shape("fan:5", 6, 9);
  check_shape("fan:1", 2, 1);
  check_shape("grid:3,2", 6, 7);
  check_shape("grid:5,5", 25, 40);
  check_shape("product(path:2,path:2)", 4, 4);
  check_shape("product(path:3,cycle:4)", 12, 20);
  check_shape("torus:4,4", 16, 32);
  check_shape("torus:4,8", 32, 64);
  check_shape("hypercube:1", 2, 1);
  check_shape("hypercube:3", 8, 12);
  check_shape("hypercube:6", 64, 192);
  check_shape("circulant:6,2", 6, 12);
  check_shape("circulant:6,3", 6, 15);
  check_shape("join(path:1,path:1)", 2, 1);
  check_shape("join(path:2,path:2)", 4, 6);
  check_shape("broom:3,7", 7, 6);
  check_shape("familyF:2,3,1", 10, 11);
  check_shape("familyF:1,2,0", 6, 6);
  check_shape("grn:2,6", 6, 7);
  check_shape("gr:2,5", 5, 6);
  check_shape("gprime:2,2", 5, 4);
  check_shape("gdprime:2,2", 4, 3);
  check_shape("figure1", 13, 18);
}

TEST_CASE("labels expose the documented layouts") {
  const LabeledGraph wheel = make("wheel:6");
  CHECK(wheel.find_label("x") == 6);
  CHECK(wheel.find_label("g_1") == 0);
  CHECK(wheel.graph.degree(6) == 6);

  const LabeledGraph grid = make("grid:3,2");
  CHECK(grid.find_label("(0,0)") == 0);
  CHECK(grid.find_label("(2,1)") == 5);

  const LabeledGraph broom = make("broom:3,7");
  const int center = *broom.find_label("c");
  CHECK(broom.graph.degree(center) == 4);
  CHECK(broom.find_label("p_1").has_value());
  CHECK(broom.find_label("l_3").has_value());

  const LabeledGraph fig = make("figure1");
  CHECK(fig.find_label("1") == 0);
  CHECK(fig.find_label("13") == 12);
  CHECK(fig.find_label("0") == std::nullopt);
  CHECK(fig.graph.edge_id(0, 1).has_value());   // labels 1-2
  CHECK(fig.graph.edge_id(9, 11).has_value());  // labels 10-12

  const LabeledGraph cube = make("hypercube:3");
  CHECK(cube.find_label("000") == 0);
  CHECK(cube.find_label("110") == 3);  // coordinate 1 printed first

  const LabeledGraph join = make("join(path:2,path:1)");
  CHECK(join.find_label("l:0") == 0);
  CHECK(join.find_label("r:0") == 2);

  const LabeledGraph ff = make("familyF:2,3,1");
  for (const std::string l : {"x", "k_1a", "k_2b", "p_1", "s", "t_3"})
    CHECK(ff.find_label(l).has_value());
}

TEST_CASE("the realization dispatch covers its whole domain") {
  const LabeledGraph a = realization_graph(2, 4, 8);
  CHECK(a.graph.vertex_count() == 8);
  const LabeledGraph b = realization_graph(2, 3, 7);
  CHECK(b.graph.vertex_count() == 7);
  const LabeledGraph c = realization_graph(3, 4, 10);
  CHECK(c.graph.vertex_count() == 10);
  const LabeledGraph d = realization_graph(4, 6, 9);
  CHECK(d.graph.vertex_count() == 9);
  const LabeledGraph e = realization_graph(4, 6, 8);
  CHECK(e.graph.vertex_count() == 8);

  for (int r = 2; r <= 4; ++r)
    for (int t = r; t <= 2 * r; ++t)
      for (int n = t + 2; n <= 13; ++n) {
        CAPTURE(r);
        CAPTURE(t);
        CAPTURE(n);
        CHECK(realization_graph(r, t, n).graph.vertex_count() == n);
      }

  CHECK(code_of([] { realization_graph(1, 2, 6); }) == Errc::parameter_out_of_domain);
  CHECK(code_of([] { realization_graph(2, 5, 9); }) == Errc::parameter_out_of_domain);
  CHECK(code_of([] { realization_graph(2, 1, 9); }) == Errc::parameter_out_of_domain);
  CHECK(code_of([] { realization_graph(3, 4, 5); }) == Errc::parameter_out_of_domain);
}

TEST_CASE("published generators verify on their graphs") {
  CHECK(hypercube_generator(4) == std::vector<int>{11, 13, 14, 15});
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    const LabeledGraph cube = make("hypercube:" + std::to_string(n));
    CHECK(is_edge_metric_generator(cube.graph, hypercube_generator(n)).ok);
  }

  CHECK(torus_generator(1, 1) == std::vector<int>{0, 2, 5});
  const LabeledGraph t44 = make("torus:4,4");
  CHECK(is_edge_metric_generator(t44.graph, torus_generator(1, 1)).ok);
  const LabeledGraph t48 = make("torus:4,8");
  CHECK(is_edge_metric_generator(t48.graph, torus_generator(1, 2)).ok);
}
