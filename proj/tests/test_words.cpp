#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "raag/graph.hpp"
#include "raag/graph_gen.hpp"
#include "raag/words.hpp"

using namespace raag;

namespace {

Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(default_names(n), edges);
}

Graph discrete(int n) {
  return Graph(default_names(n), std::vector<std::pair<int, int>>{});
}

Word w(const Graph& g, const std::string& text) { return parse_word(g, text); }

// Random rewriting schedule: commuting swaps, insertions of cancelling
// pairs, and eligible cancellations, applied in random order. The element
// is unchanged.
Word scramble(const Graph& g, Word v, Rng& rng, int steps) {
  for (int s = 0; s < steps; ++s) {
    switch (rand_below(rng, 3)) {
      case 0: {  // swap an adjacent commuting pair
        if (v.size() < 2) break;
        std::size_t i = rand_below(rng, v.size() - 1);
        if (g.adjacent(v[i].gen, v[i + 1].gen)) std::swap(v[i], v[i + 1]);
        break;
      }
      case 1: {  // insert x x^-1
        std::size_t pos = rand_below(rng, v.size() + 1);
        int gen = static_cast<int>(rand_below(rng, g.size()));
        int sign = rand_below(rng, 2) ? 1 : -1;
        v.insert(v.begin() + pos, {{gen, sign}, {gen, -sign}});
        break;
      }
      default: {  // cancel an eligible pair, if any
        bool done = false;
        for (std::size_t i = 0; i < v.size() && !done; ++i)
          for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[j].gen == v[i].gen) {
              if (v[j].sign == -v[i].sign) {
                v.erase(v.begin() + j);
                v.erase(v.begin() + i);
                done = true;
              }
              break;
            }
            if (!g.adjacent(v[i].gen, v[j].gen)) break;
          }
        break;
      }
    }
  }
  return v;
}

}  // namespace

TEST_CASE("normal form basics") {
  Graph p3 = path(3);  // a-b-c: a,c do not commute
  CHECK(word_to_string(p3, normal_form(p3, w(p3, "a c a^-1"))) == "a c a^-1");

  Graph k2(std::vector<std::string>{"a", "b"},
           std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(word_to_string(k2, normal_form(k2, w(k2, "a b a^-1"))) == "b");
  CHECK(normal_form(k2, w(k2, "a a^-1")).empty());

  // canonical shuffle is the least word of the commutation class:
  // on a-b-c, c·a·b rewrites to b·c·a via b moving over both
  CHECK(word_to_string(p3, normal_form(p3, w(p3, "c a b"))) == "b c a");

  CHECK_THROWS_AS(normal_form(p3, Word{{9, 1}}), std::invalid_argument);
}

TEST_CASE("equality") {
  Graph k2(std::vector<std::string>{"a", "b"},
           std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(equal(k2, w(k2, "a b"), w(k2, "b a")));

  Graph d2 = discrete(2);
  CHECK(!equal(d2, w(d2, "a b"), w(d2, "b a")));

  Graph p3 = path(3);
  CHECK(equal(p3, w(p3, "b a b^-1"), w(p3, "a")));
  CHECK(equal(p3, multiply(w(p3, "b a b^-1"), w(p3, "b c")),
              multiply(w(p3, "a"), w(p3, "b c"))));
}

TEST_CASE("multiply and invert") {
  Graph p3 = path(3);
  CHECK(word_to_string(p3, invert(w(p3, "a b^-1"))) == "b a^-1");
  CHECK(is_identity(p3, multiply(w(p3, "a"), w(p3, "a^-1"))));
  CHECK(word_to_string(p3, multiply(w(p3, "a b"), w(p3, "c"))) == "a b c");
}

TEST_CASE("cyclic reduction") {
  Graph d2 = discrete(2);
  auto cr = cyclically_reduce(d2, w(d2, "b a b^-1"));
  CHECK(word_to_string(d2, cr.core) == "a");
  CHECK(word_to_string(d2, cr.conjugator) == "b");

  Graph p3 = path(3);
  auto cr2 = cyclically_reduce(p3, w(p3, "c b a b^-1 c^-1"));
  CHECK(word_to_string(p3, cr2.core) == "a");
  CHECK(word_to_string(p3, cr2.conjugator) == "c");

  auto cr3 = cyclically_reduce(p3, w(p3, "a b"));
  CHECK(cr3.conjugator.empty());
  CHECK(word_to_string(p3, cr3.core) == "a b");

  // round trip on random words
  Rng rng(42);
  for (int i = 0; i < 300; ++i) {
    int n = 2 + static_cast<int>(rand_below(rng, 5));
    Graph g = random_connected_graph(rng, n, 0.4);
    Word v;
    int len = static_cast<int>(rand_below(rng, 11));
    for (int k = 0; k < len; ++k)
      v.push_back({static_cast<int>(rand_below(rng, n)),
                   rand_below(rng, 2) ? 1 : -1});
    auto cr4 = cyclically_reduce(g, v);
    CHECK(equal(g, v, conjugate_word(cr4.conjugator, cr4.core)));
    CHECK(is_cyclically_reduced(g, cr4.core));
  }
}

TEST_CASE("support") {
  Graph d2 = discrete(2);
  CHECK(support(d2, {}).empty());
  CHECK(support(d2, w(d2, "a b a^-1")) == VertexSet::of({0, 1}));
  Graph k2(std::vector<std::string>{"a", "b"},
           std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(support(k2, w(k2, "a b a^-1")) == VertexSet::single(1));
}

TEST_CASE("abelianization") {
  Graph p3 = path(3);
  IntVector v = abelianize(p3, w(p3, "a b a"));
  CHECK(v == IntVector{2, 1, 0});
  CHECK(abelianize(p3, w(p3, "b b^-1")) == IntVector{0, 0, 0});
  CHECK(int_vector_to_string(p3, v) == "(a:2 b:1)");
  CHECK(int_vector_to_string(p3, IntVector{0, 0, 0}) == "0");

  // homomorphism and conjugation invariance
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    int n = 2 + static_cast<int>(rand_below(rng, 5));
    Graph g = random_connected_graph(rng, n, 0.4);
    auto rand_word = [&](int maxlen) {
      Word out;
      int len = static_cast<int>(rand_below(rng, maxlen + 1));
      for (int k = 0; k < len; ++k)
        out.push_back({static_cast<int>(rand_below(rng, n)),
                       rand_below(rng, 2) ? 1 : -1});
      return out;
    };
    Word a = rand_word(8), b = rand_word(8);
    IntVector ab = abelianize(g, multiply(a, b));
    IntVector sum = abelianize(g, a);
    IntVector vb = abelianize(g, b);
    for (int k = 0; k < n; ++k) sum[k] += vb[k];
    CHECK(ab == sum);
    IntVector neg = abelianize(g, invert(a));
    IntVector va = abelianize(g, a);
    for (int k = 0; k < n; ++k) CHECK(neg[k] == -va[k]);
    CHECK(abelianize(g, normal_form(g, conjugate_word(b, a))) == va);
  }
}

TEST_CASE("extract conjugator") {
  Graph d2 = discrete(2);
  auto h = extract_conjugator(d2, w(d2, "a"), w(d2, "b a b^-1"));
  REQUIRE(h.has_value());
  CHECK(word_to_string(d2, *h) == "b");

  auto h2 = extract_conjugator(d2, w(d2, "a"), w(d2, "a"));
  REQUIRE(h2.has_value());
  CHECK(h2->empty());

  CHECK(!extract_conjugator(d2, w(d2, "a"), w(d2, "b")).has_value());

  // x must be cyclically reduced
  CHECK_THROWS_AS(extract_conjugator(d2, w(d2, "b a b^-1"), w(d2, "a")),
                  std::invalid_argument);

  // found conjugators really conjugate
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    int n = 2 + static_cast<int>(rand_below(rng, 4));
    Graph g = random_connected_graph(rng, n, 0.4);
    Word x{{static_cast<int>(rand_below(rng, n)), 1}};
    Word conj;
    int len = static_cast<int>(rand_below(rng, 5));
    for (int k = 0; k < len; ++k)
      conj.push_back({static_cast<int>(rand_below(rng, n)),
                      rand_below(rng, 2) ? 1 : -1});
    Word y = conjugate_word(conj, x);
    auto found = extract_conjugator(g, x, y);
    REQUIRE(found.has_value());
    CHECK(equal(g, y, conjugate_word(*found, x)));
  }
}

TEST_CASE("ball enumeration") {
  Graph f1 = discrete(1);
  CHECK(enumerate_ball(f1, 0).size() == 1);
  CHECK(enumerate_ball(f1, 2).size() == 5);  // 1, a, a^-1, a^2, a^-2

  Graph k2(std::vector<std::string>{"a", "b"},
           std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(enumerate_ball(k2, 1).size() == 5);

  // free group sphere sizes: 2n(2n-1)^(k-1)
  for (int n = 1; n <= 2; ++n) {
    Graph fn = discrete(n);
    std::size_t expect = 1;
    for (int r = 1; r <= 4; ++r) {
      std::size_t sphere = 2 * n;
      for (int k = 1; k < r; ++k) sphere *= 2 * n - 1;
      expect += sphere;
      CHECK(enumerate_ball(fn, r).size() == expect);
    }
  }

  // support restriction enumerates the special subgroup's ball
  Graph p3 = path(3);
  auto sub = enumerate_ball(p3, 2, VertexSet::of({0, 2}));  // free on a,c
  CHECK(sub.size() == 17);  // F2 ball of radius 2: 1 + 4 + 12
}

TEST_CASE("normal form is schedule independent and idempotent") {
  Rng rng(2024);
  for (int i = 0; i < 1500; ++i) {
    int n = 2 + static_cast<int>(rand_below(rng, 5));
    Graph g = random_connected_graph(rng, n, 0.4);
    Word v;
    int len = static_cast<int>(rand_below(rng, 13));
    for (int k = 0; k < len; ++k)
      v.push_back({static_cast<int>(rand_below(rng, n)),
                   rand_below(rng, 2) ? 1 : -1});
    Word nf = normal_form(g, v);
    CHECK(normal_form(g, nf) == nf);
    Word other = scramble(g, v, rng, 12);
    CHECK(normal_form(g, other) == nf);
  }
}

TEST_CASE("equality is a congruence") {
  Rng rng(555);
  for (int i = 0; i < 150; ++i) {
    int n = 2 + static_cast<int>(rand_below(rng, 5));
    Graph g = random_connected_graph(rng, n, 0.4);
    auto rand_word = [&](int maxlen) {
      Word out;
      int len = static_cast<int>(rand_below(rng, maxlen + 1));
      for (int k = 0; k < len; ++k)
        out.push_back({static_cast<int>(rand_below(rng, n)),
                       rand_below(rng, 2) ? 1 : -1});
      return out;
    };
    Word u1 = rand_word(8);
    Word u2 = rand_word(8);
    // equivalent rewordings of u1 and u2
    Word v1 = normal_form(g, u1);
    Word v2 = multiply(u2, multiply(Word{{0, 1}}, Word{{0, -1}}));
    REQUIRE(equal(g, u1, v1));
    REQUIRE(equal(g, u2, v2));
    CHECK(equal(g, multiply(u1, u2), multiply(v1, v2)));
  }
}

TEST_CASE("defining relations hold exactly for edges") {
  Rng rng(77);
  for (int i = 0; i < 40; ++i) {
    int n = 2 + static_cast<int>(rand_below(rng, 5));
    Graph g = random_connected_graph(rng, n, 0.4);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        CHECK(commutes(g, Word{{u, 1}}, Word{{v, 1}}) == g.adjacent(u, v));
  }
}

TEST_CASE("word serialization round trip") {
  Graph p3 = path(3);
  Word v = w(p3, "a b^-1 c a^-1");
  CHECK(parse_word(p3, word_to_string(p3, v)) == v);
  CHECK(word_to_string(p3, Word{}) == "(empty)");
  CHECK(parse_word(p3, "(empty)").empty());
  CHECK_THROWS_AS(parse_word(p3, "a q"), std::invalid_argument);
}
