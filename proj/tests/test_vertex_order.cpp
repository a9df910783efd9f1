#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "raag/graph_gen.hpp"
#include "raag/vertex_order.hpp"
#include "raag/verify_suites.hpp"

using namespace raag;

namespace {

Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(default_names(n), edges);
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(default_names(n), edges);
}

Graph star13() {
  return Graph({"z", "x", "y", "w"},
               std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
}

}  // namespace

TEST_CASE("leq") {
  Graph p3 = path(3);
  CHECK(leq(p3, 0, 1));   // lk(a)={b} ⊆ st(b)
  CHECK(!leq(p3, 1, 0));  // c ∈ lk(b), c ∉ st(a)
  CHECK(leq(p3, 1, 1));
  CHECK(leq(p3, 0, 2));  // lk(a)={b} ⊆ st(c)
}

TEST_CASE("leq_case") {
  Graph p3 = path(3);
  CHECK(leq_case(p3, 0, 1) == LeqCase::adjacent_star);
  CHECK(leq_case(p3, 0, 2) == LeqCase::distance_two_link);
  CHECK(leq_case(p3, 1, 1) == LeqCase::equal);
  CHECK(leq_case(p3, 1, 0) == LeqCase::not_leq);

  // isolated vertex: leq holds vacuously, but no case applies
  Graph mixed(std::vector<std::string>{"a", "b", "c"},
              std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(leq_case(mixed, 2, 0) == LeqCase::disconnected_anomaly);
}

TEST_CASE("equivalence classes") {
  Graph p3 = path(3);
  auto cls = equivalence_classes(p3);
  REQUIRE(cls.size() == 2);
  CHECK(cls[0].members == VertexSet::of({0, 2}));
  CHECK(!cls[0].abelian);  // distance-2 class is free
  CHECK(cls[1].members == VertexSet::single(1));
  CHECK(cls[1].abelian);

  auto kcls = equivalence_classes(complete(4));
  REQUIRE(kcls.size() == 1);
  CHECK(kcls[0].members == VertexSet::full(4));
  CHECK(kcls[0].abelian);

  auto pcls = equivalence_classes(path(4));
  CHECK(pcls.size() == 4);
  for (const auto& c : pcls) CHECK(c.abelian);  // singletons

  Graph mixed(std::vector<std::string>{"a", "b", "c"},
              std::vector<std::pair<int, int>>{{0, 1}});
  CHECK_THROWS_WITH(equivalence_classes(mixed), doctest::Contains("connected"));
}

TEST_CASE("class poset") {
  Graph p3 = path(3);
  ClassPoset pp = class_poset(p3);
  REQUIRE(pp.classes.size() == 2);
  CHECK(pp.strictly_less(0, 1));  // [{a,c}] < [{b}]
  CHECK(pp.maximal == std::vector<bool>{false, true});

  ClassPoset pk = class_poset(complete(3));
  CHECK(pk.classes.size() == 1);
  CHECK(pk.maximal[0]);

  Graph p4 = path(4);
  ClassPoset p4p = class_poset(p4);
  REQUIRE(p4p.classes.size() == 4);
  // maximal classes {b},{c}; a<b, a<c, d<b, d<c
  CHECK(p4p.maximal == std::vector<bool>{false, true, true, false});
  CHECK(p4p.strictly_less(0, 1));
  CHECK(p4p.strictly_less(0, 2));
  CHECK(p4p.strictly_less(3, 1));
  CHECK(p4p.strictly_less(3, 2));
  CHECK(!p4p.strictly_less(0, 3));
  CHECK(!p4p.strictly_less(1, 2));
}

TEST_CASE("gamma zero") {
  Graph p3 = path(3);
  GammaZero g0 = gamma_zero(p3);
  CHECK(g0.singleton());

  Graph p4 = path(4);
  GammaZero g4 = gamma_zero(p4);
  REQUIRE(g4.class_indices.size() == 2);
  REQUIRE(g4.edges.size() == 1);

  GammaZero gk = gamma_zero(complete(5));
  CHECK(gk.singleton());

  // square: two free classes, joined by an edge
  Graph c4(default_names(4),
           std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  GammaZero gc = gamma_zero(c4);
  CHECK(gc.class_indices.size() == 2);
  CHECK(gc.edges.size() == 1);
}

TEST_CASE("chain shape") {
  Graph p4 = path(4);
  // chain a < c: a single distance-2 gap, so the breakpoint is 1
  CHECK(chain_shape(p4, {0, 2}) == 1);
  // length-1 chain
  CHECK(chain_shape(p4, {1}) == 0);

  Graph st = star13();
  // chain x < z at distance 1: breakpoint 0
  CHECK(chain_shape(st, {1, 0}) == 0);

  // not a chain
  CHECK_THROWS_WITH(chain_shape(p4, {1, 0}), doctest::Contains("not a strictly"));
  CHECK_THROWS_AS(chain_shape(p4, {0, 3}), std::invalid_argument);

  // mixed chain on a path of length 5: a < c at distance 2, then c maximal...
  Graph p5 = path(5);
  CHECK(chain_shape(p5, {0, 2}) == 1);
  CHECK(chain_shape(p5, {0, 1}) == 0);
}

TEST_CASE("order lemmas on random connected graphs") {
  Rng rng(2718);
  for (int i = 0; i < 60; ++i) {
    int n = 2 + static_cast<int>(rand_below(rng, 7));
    Graph g = random_connected_graph(rng, n, 0.35);
    SuiteResult r = suite_order_lemmas_on(g);
    if (!r.pass) {
      for (const auto& f : r.failures) MESSAGE(f);
    }
    CHECK(r.pass);
  }
}
