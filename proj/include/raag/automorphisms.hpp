#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "raag/graph.hpp"
#include "raag/words.hpp"

namespace raag {

// Symbolic Laurence generator of Aut(A_Γ).
struct GeneratorSpec {
  enum class Kind {
    inversion,            // v -> v^-1
    transvection,         // v -> vw, requires v <= w and v != w
    partial_conjugation,  // u -> v u v^-1 for u in one component of Γ - st(v)
    inner,                // u -> v u v^-1 for every u
    symmetry,             // adjacency-preserving permutation of the generators
  };
  Kind kind;
  int v = -1;
  int w = -1;                    // transvection target
  VertexSet component;           // partial conjugation
  std::vector<int> permutation;  // symmetry: vertex -> image vertex

  static GeneratorSpec inversion_of(int v);
  static GeneratorSpec transvection_of(int v, int w);
  static GeneratorSpec partial_conjugation_of(int v, VertexSet component);
  static GeneratorSpec inner_of(int v);
  static GeneratorSpec symmetry_of(std::vector<int> permutation);
};

// Throws std::invalid_argument when the spec violates its constraints.
void validate_generator_spec(const Graph& g, const GeneratorSpec& spec);

std::string spec_to_string(const Graph& g, const GeneratorSpec& spec);

// The pure (symmetry-free) Laurence generators, in a fixed order: all
// inversions, all inners, all transvections (v,w) with v <= w, v != w, and
// the partial conjugations (v,C) with v maximal in the domination order and
// C a component of Γ - st(v). Graph symmetries are excluded here; use
// enumerate_graph_symmetries.
std::vector<GeneratorSpec> enumerate_laurence_generators(const Graph& g);

// All adjacency-preserving vertex permutations, lexicographically ordered.
std::vector<std::vector<int>> enumerate_graph_symmetries(const Graph& g);

// Automorphism as a total map generator -> word, with the inverse map
// stored alongside (constructed analytically for generators, composed for
// products). Images are kept in normal form.
struct Automorphism {
  std::vector<Word> images;
  std::vector<Word> inverse_images;
};

Automorphism identity_automorphism(const Graph& g);
Automorphism as_automorphism(const Graph& g, const GeneratorSpec& spec);
// Conjugation by an arbitrary word.
Automorphism inner_by_word(const Graph& g, const Word& h);

// Homomorphic extension of the images to a word; result in normal form.
Word apply(const Graph& g, const Automorphism& f, const Word& w);
Word apply_inverse(const Graph& g, const Automorphism& f, const Word& w);

// compose(f,h)(x) = f(h(x)); a generator word [s1,...,sk] denotes
// s1 ∘ s2 ∘ ... ∘ sk, i.e. the rightmost factor acts first.
Automorphism compose(const Graph& g, const Automorphism& f,
                     const Automorphism& h);
Automorphism compose_word(const Graph& g,
                          const std::vector<GeneratorSpec>& word);

bool automorphisms_equal(const Graph& g, const Automorphism& f,
                         const Automorphism& h);
bool is_identity(const Graph& g, const Automorphism& f);

struct VerificationReport {
  bool ok = true;
  std::vector<std::string> violations;
};
// Checks that the images preserve every edge relation and that the stored
// inverse really inverts the map on every generator.
VerificationReport verify_automorphism(const Graph& g, const Automorphism& f);

// Square integer matrix indexed by the vertices.
struct IntMatrix {
  int n = 0;
  std::vector<long long> a;  // row-major

  long long& at(int i, int j) { return a[i * n + j]; }
  long long at(int i, int j) const { return a[i * n + j]; }
  static IntMatrix identity(int n);
  bool operator==(const IntMatrix&) const = default;
};
IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);
long long mat_det(const IntMatrix& m);

// Column v = abelianization of f(v). The determinant must be ±1 for a
// genuine automorphism; anything else raises std::logic_error.
IntMatrix abelianization_matrix(const Graph& g, const Automorphism& f);

// Bounded semi-decision of inner-ness: searches the ball of the given
// radius for h with f(v) = h v h^-1 for every v; returns the first hit in
// ball order, nullopt if none within the radius.
std::optional<Word> is_inner_bounded(const Graph& g, const Automorphism& f,
                                     int radius);

// Serialization: vertex-name -> word maps plus the ambient graph's hash.
// read_automorphism re-verifies the hash and both automorphism invariants.
void write_automorphism(std::ostream& out, const Graph& g,
                        const Automorphism& f);
Automorphism read_automorphism(std::istream& in, const Graph& g);

}  // namespace raag
