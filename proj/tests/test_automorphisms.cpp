#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "raag/automorphisms.hpp"
#include "raag/graph_gen.hpp"
#include "raag/verify_suites.hpp"

using namespace raag;
using Kind = GeneratorSpec::Kind;

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

int count_kind(const std::vector<GeneratorSpec>& gens, Kind k) {
  int c = 0;
  for (const auto& s : gens) c += s.kind == k;
  return c;
}

}  // namespace

TEST_CASE("laurence generator inventory") {
  Graph p4 = path(4);
  auto gens = enumerate_laurence_generators(p4);
  CHECK(count_kind(gens, Kind::inversion) == 4);
  CHECK(count_kind(gens, Kind::inner) == 4);
  CHECK(count_kind(gens, Kind::transvection) == 4);
  CHECK(count_kind(gens, Kind::partial_conjugation) == 2);
  // the transvections are exactly t(a,b), t(a,c), t(d,b), t(d,c)
  std::vector<std::string> ts;
  for (const auto& s : gens)
    if (s.kind == Kind::transvection) ts.push_back(spec_to_string(p4, s));
  CHECK(ts == std::vector<std::string>{"t(a,b)", "t(a,c)", "t(d,b)", "t(d,c)"});
  // and the partial conjugations are pc(b|{d}) and pc(c|{a})
  std::vector<std::string> pcs;
  for (const auto& s : gens)
    if (s.kind == Kind::partial_conjugation) pcs.push_back(spec_to_string(p4, s));
  CHECK(pcs == std::vector<std::string>{"pc(b|{d})", "pc(c|{a})"});

  for (int n = 2; n <= 4; ++n) {
    Graph kn = complete(n);
    auto kg = enumerate_laurence_generators(kn);
    CHECK(count_kind(kg, Kind::transvection) == n * (n - 1));
    CHECK(count_kind(kg, Kind::inversion) == n);
    CHECK(count_kind(kg, Kind::partial_conjugation) == 0);
  }

  // rank-2 free group: one transvection per ordered pair, and the partial
  // conjugations coincide with the inners
  Graph d2(default_names(2), std::vector<std::pair<int, int>>{});
  auto dg = enumerate_laurence_generators(d2);
  CHECK(count_kind(dg, Kind::transvection) == 2);
  CHECK(count_kind(dg, Kind::inversion) == 2);
  CHECK(count_kind(dg, Kind::inner) == 2);
  CHECK(count_kind(dg, Kind::partial_conjugation) == 2);
  for (const auto& s : dg)
    if (s.kind == Kind::partial_conjugation)
      CHECK(automorphisms_equal(
          d2, as_automorphism(d2, s),
          as_automorphism(d2, GeneratorSpec::inner_of(s.v))));

  // star: the leaves are dominated by the center, so no partial
  // conjugations are enumerated even though their stars separate
  Graph st({"z", "x", "y", "w"},
           std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
  auto sg = enumerate_laurence_generators(st);
  CHECK(count_kind(sg, Kind::partial_conjugation) == 0);  // leaves are dominated
  CHECK(count_kind(sg, Kind::transvection) == 9);
}

TEST_CASE("generator actions") {
  Graph p4 = path(4);
  Automorphism t = as_automorphism(p4, GeneratorSpec::transvection_of(0, 1));
  CHECK(word_to_string(p4, t.images[0]) == "a b");
  CHECK(word_to_string(p4, t.images[2]) == "c");

  Automorphism pc =
      as_automorphism(p4, GeneratorSpec::partial_conjugation_of(1, VertexSet::single(3)));
  CHECK(word_to_string(p4, pc.images[3]) == "b d b^-1");
  CHECK(word_to_string(p4, pc.images[0]) == "a");

  Automorphism inv = as_automorphism(p4, GeneratorSpec::inversion_of(1));
  CHECK(is_identity(p4, compose(p4, inv, inv)));

  // invalid specs are rejected
  CHECK_THROWS_AS(as_automorphism(p4, GeneratorSpec::transvection_of(1, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      as_automorphism(p4, GeneratorSpec::partial_conjugation_of(1, VertexSet::single(0))),
      std::invalid_argument);
}

TEST_CASE("apply and compose") {
  Graph p4 = path(4);
  Automorphism id = identity_automorphism(p4);
  Word w = parse_word(p4, "a b^-1 c");
  CHECK(apply(p4, id, w) == normal_form(p4, w));

  Automorphism t = as_automorphism(p4, GeneratorSpec::transvection_of(0, 1));
  CHECK(equal(p4, apply(p4, t, parse_word(p4, "a^-1")),
              parse_word(p4, "b^-1 a^-1")));

  Automorphism inner_b = as_automorphism(p4, GeneratorSpec::inner_of(1));
  CHECK(equal(p4, apply(p4, inner_b, w),
              conjugate_word(parse_word(p4, "b"), w)));

  Automorphism tt = compose(p4, t, t);
  CHECK(word_to_string(p4, tt.images[0]) == "a b b");

  CHECK(automorphisms_equal(p4, compose(p4, t, id), t));

  // associativity on random generator triples
  Rng rng(17);
  auto gens = enumerate_laurence_generators(p4);
  for (int i = 0; i < 40; ++i) {
    Automorphism f = as_automorphism(p4, gens[rand_below(rng, gens.size())]);
    Automorphism g2 = as_automorphism(p4, gens[rand_below(rng, gens.size())]);
    Automorphism h = as_automorphism(p4, gens[rand_below(rng, gens.size())]);
    CHECK(automorphisms_equal(p4, compose(p4, compose(p4, f, g2), h),
                              compose(p4, f, compose(p4, g2, h))));
  }
}

TEST_CASE("verification catches bad maps") {
  Graph k2 = complete(2);
  // a -> b, b -> b is not invertible
  Automorphism bad;
  bad.images = {parse_word(k2, "b"), parse_word(k2, "b")};
  bad.inverse_images = {parse_word(k2, "a"), parse_word(k2, "b")};
  CHECK(!verify_automorphism(k2, bad).ok);

  // swapping endpoints of the only edge in a path breaks a relation
  Graph p3 = path(3);
  Automorphism swap;
  swap.images = {parse_word(p3, "b"), parse_word(p3, "a"), parse_word(p3, "c")};
  swap.inverse_images = swap.images;
  CHECK(!verify_automorphism(p3, swap).ok);

  // all Laurence generators verify
  for (const auto& s : enumerate_laurence_generators(p3))
    CHECK(verify_automorphism(p3, as_automorphism(p3, s)).ok);
}

TEST_CASE("abelianization matrices") {
  Graph p4 = path(4);
  CHECK(abelianization_matrix(p4, as_automorphism(p4, GeneratorSpec::inner_of(1))) ==
        IntMatrix::identity(4));

  IntMatrix mi =
      abelianization_matrix(p4, as_automorphism(p4, GeneratorSpec::inversion_of(2)));
  CHECK(mi.at(2, 2) == -1);
  CHECK(mat_det(mi) == -1);

  IntMatrix mt = abelianization_matrix(
      p4, as_automorphism(p4, GeneratorSpec::transvection_of(0, 1)));
  CHECK(mt.at(1, 0) == 1);  // column a picks up a unit at row b
  CHECK(mat_det(mt) == 1);

  // multiplicativity over random pairs
  Rng rng(23);
  auto gens = enumerate_laurence_generators(p4);
  for (int i = 0; i < 60; ++i) {
    Automorphism f = as_automorphism(p4, gens[rand_below(rng, gens.size())]);
    Automorphism h = as_automorphism(p4, gens[rand_below(rng, gens.size())]);
    CHECK(abelianization_matrix(p4, compose(p4, f, h)) ==
          mat_mul(abelianization_matrix(p4, f), abelianization_matrix(p4, h)));
  }
}

TEST_CASE("bounded inner detection") {
  Graph p4 = path(4);
  auto h = is_inner_bounded(p4, as_automorphism(p4, GeneratorSpec::inner_of(2)), 2);
  REQUIRE(h.has_value());
  CHECK(word_to_string(p4, *h) == "c");

  auto e = is_inner_bounded(p4, identity_automorphism(p4), 2);
  REQUIRE(e.has_value());
  CHECK(e->empty());

  CHECK(!is_inner_bounded(p4, as_automorphism(p4, GeneratorSpec::inversion_of(0)), 3)
           .has_value());
}

TEST_CASE("graph symmetries") {
  Graph p3 = path(3);
  auto sym = enumerate_graph_symmetries(p3);
  REQUIRE(sym.size() == 2);
  CHECK(sym[0] == std::vector<int>{0, 1, 2});
  CHECK(sym[1] == std::vector<int>{2, 1, 0});

  CHECK(enumerate_graph_symmetries(complete(4)).size() == 24);

  // asymmetric tree: a-b-c-d plus leaf e on b
  Graph t({"a", "b", "c", "d", "e"},
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {1, 4}});
  CHECK(enumerate_graph_symmetries(t).size() == 2);  // a<->e swap only
  Graph t2({"a", "b", "c", "d"},
           std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}});
  // star with 3 leaves: 3! leaf permutations
  CHECK(enumerate_graph_symmetries(t2).size() == 6);

  for (const auto& p : enumerate_graph_symmetries(p3)) {
    Automorphism f = as_automorphism(p3, GeneratorSpec::symmetry_of(p));
    CHECK(verify_automorphism(p3, f).ok);
  }
}

TEST_CASE("automorphism serialization") {
  Graph p4 = path(4);
  Automorphism f = compose(
      p4, as_automorphism(p4, GeneratorSpec::transvection_of(0, 1)),
      as_automorphism(p4, GeneratorSpec::partial_conjugation_of(1, VertexSet::single(3))));
  std::ostringstream out;
  write_automorphism(out, p4, f);
  std::istringstream in(out.str());
  Automorphism g2 = read_automorphism(in, p4);
  CHECK(automorphisms_equal(p4, f, g2));

  // wrong graph: hash mismatch
  Graph other = complete(4);
  std::istringstream in2(out.str());
  CHECK_THROWS_WITH(read_automorphism(in2, other), doctest::Contains("hash"));

  // tampered image: verification failure
  std::string text = out.str();
  auto pos = text.find("image a: a b");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 12, "image a: b b");
  std::istringstream in3(text);
  CHECK_THROWS_WITH(read_automorphism(in3, p4), doctest::Contains("verification"));
}

TEST_CASE("generator suite on random graphs") {
  Rng rng(31);
  for (int i = 0; i < 25; ++i) {
    int n = 2 + static_cast<int>(rand_below(rng, 6));
    Graph g = random_connected_graph(rng, n, 0.35);
    SuiteResult r = suite_generator_wellformed_on(g, rng, 10);
    if (!r.pass)
      for (const auto& f : r.failures) MESSAGE(f);
    CHECK(r.pass);
  }
}
