#pragma once

#include <optional>
#include <string>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

// One signed generator of A_Γ. `gen` is a vertex index of the ambient graph.
struct Letter {
  int gen = 0;
  int sign = 1;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

// Element of A_Γ as a signed-generator sequence. Operations that need the
// commutation structure take the ambient graph explicitly; letters with
// generators outside the graph are rejected there.
using Word = std::vector<Letter>;

// Exponent-sum vector over the vertices of the ambient graph.
using IntVector = std::vector<long long>;

Word invert(const Word& w);
Word multiply(const Word& a, const Word& b);
Word multiply(const Word& a, const Word& b, const Word& c);
// h w h^-1 as a raw word.
Word conjugate_word(const Word& h, const Word& w);

// Canonical representative of the element of A_Γ represented by w: fully
// reduced (no letter cancels against an inverse reachable through commuting
// letters), then shuffled to the lexicographically least word of its
// commutation class under the vertex-list order with v before v^-1. Two
// words represent the same element iff their normal forms are identical.
Word normal_form(const Graph& g, const Word& w);

bool equal(const Graph& g, const Word& a, const Word& b);
bool is_identity(const Graph& g, const Word& w);
bool commutes(const Graph& g, const Word& a, const Word& b);

struct CyclicReduction {
  Word core;        // cyclically reduced, in normal form
  Word conjugator;  // w = conjugator · core · conjugator^-1
};
CyclicReduction cyclically_reduce(const Graph& g, const Word& w);
bool is_cyclically_reduced(const Graph& g, const Word& w);

// Generators appearing in the normal form of w.
VertexSet support(const Graph& g, const Word& w);

IntVector abelianize(const Graph& g, const Word& w);

// Best-effort structural peel: some h with y = h x h^-1, found by cyclically
// reducing y and comparing the core against x. Requires x cyclically
// reduced. Returns nullopt when the peel does not exhibit the conjugacy;
// this is not a full conjugacy solver. h is determined only up to right
// multiplication by the centralizer of x.
std::optional<Word> extract_conjugator(const Graph& g, const Word& x,
                                       const Word& y);

// All distinct elements with normal-form length <= radius, each exactly
// once, in a deterministic breadth-first order (level by level, within a
// level in discovery order). Optional support restricts the generators
// used, which enumerates the ball of the special subgroup on that set.
// Memory grows with the ball; radii beyond ~6 on sparse graphs get large.
std::vector<Word> enumerate_ball(const Graph& g, int radius,
                                 std::optional<VertexSet> support = std::nullopt);

// Serialization: whitespace-separated tokens `v` / `v^-1`.
std::string word_to_string(const Graph& g, const Word& w);  // "(empty)" if trivial
Word parse_word(const Graph& g, const std::string& text);

// Compact byte key for hashing; injective on words over one graph.
std::string word_key(const Word& w);

std::string int_vector_to_string(const Graph& g, const IntVector& v);

}  // namespace raag
