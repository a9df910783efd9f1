#pragma once

#include <map>
#include <string>
#include <vector>

#include "raag/automorphisms.hpp"
#include "raag/graph.hpp"
#include "raag/subgroups.hpp"
#include "raag/vertex_order.hpp"
#include "raag/words.hpp"

namespace raag {

// Elements of the pure outer automorphism group enter as words in the
// Laurence generators; a word [s1,...,sk] denotes s1 ∘ ... ∘ sk with the
// rightmost factor acting first. Symmetry generators are rejected here.
using GeneratorWord = std::vector<GeneratorSpec>;

// Per-graph context shared by the projection/kernel operations.
struct ClassContext {
  ClassPoset poset;
  GammaZero gz;
  std::vector<JoinData> joins;  // one per class, aligned with poset.classes
  std::vector<int> maximal;     // class indices, ascending by representative
};
ClassContext make_class_context(const Graph& g);

// Representative of the word's outer class that preserves both A_[v] and
// A_{J_[v]} for the given maximal class, built by the per-generator case
// analysis: inversions and transvections pass through; a partial
// conjugation or inner by w outside J whose action meets J is corrected by
// the inner automorphism of w^-1. The result satisfies
// full = inner_by_word(inner_correction) ∘ (raw composition of the word),
// and is verified to map class members into A_[v] and J-members into A_J.
struct PreservingRep {
  Automorphism full;
  Word inner_correction;
};
PreservingRep preserving_representative(const Graph& g, const ClassContext& ctx,
                                        const GeneratorWord& word,
                                        int class_index);

// Restriction of the preserving representative to the vertices of J_[v];
// well defined on outer classes up to inner automorphisms of A_{J_[v]}.
struct RestrictedAutomorphism {
  int class_index = -1;
  VertexSet join;
  std::map<int, Word> images;  // keys: members of join
};
RestrictedAutomorphism restrict_R(const Graph& g, const ClassContext& ctx,
                                  const GeneratorWord& word, int class_index);

// Projection to A_{L_[v]}: the restriction with all letters of [v] deleted
// from every image (the quotient A_{J_[v]} / A_[v]).
struct ProjectedAutomorphism {
  int class_index = -1;
  VertexSet link_set;
  std::map<int, Word> images;  // keys: members of link_set
};
ProjectedAutomorphism project_P(const Graph& g, const ClassContext& ctx,
                                const GeneratorWord& word, int class_index);
ProjectedAutomorphism project_restriction(const Graph& g,
                                          const ClassContext& ctx,
                                          const RestrictedAutomorphism& r);

Word apply_projected(const Graph& g, const ProjectedAutomorphism& p,
                     const Word& w);
ProjectedAutomorphism compose_projected(const Graph& g,
                                        const ProjectedAutomorphism& f,
                                        const ProjectedAutomorphism& h);
bool projected_equal(const Graph& g, const ProjectedAutomorphism& f,
                     const ProjectedAutomorphism& h);

struct InnerSearchResult {
  enum class Status { found, certified_not_inner, exhausted };
  Status status = Status::exhausted;
  Word conjugator;  // valid when found
};
// Searches the ball of A_{L_[v]} (radius bounded) for h with p = conj(h) on
// every generator of L; an abelianization mismatch certifies non-inner-ness
// without search.
InnerSearchResult projected_inner_search(const Graph& g,
                                         const ProjectedAutomorphism& p,
                                         int radius);

// Restrictions and projections for every maximal class, ascending.
struct RPBundle {
  std::vector<RestrictedAutomorphism> restrictions;
  std::vector<ProjectedAutomorphism> projections;
};
RPBundle assemble_RP(const Graph& g, const ClassContext& ctx,
                     const GeneratorWord& word);

// Classes [v] whose L_[v] contains exactly one maximal class [w] with
// [v] < [w]; the partner is always abelian (verified).
struct LeafLikeClass {
  int class_index = -1;    // the leaf-like class
  int partner_index = -1;  // the unique maximal class in its L
};
std::vector<LeafLikeClass> leaf_like_classes(const Graph& g,
                                             const ClassContext& ctx);

struct LeafTransvection {
  int v = -1;  // member of a leaf-like class
  int w = -1;  // member of the partner class
};
std::vector<LeafTransvection> leaf_transvections(const Graph& g,
                                                 const ClassContext& ctx);

// The kernel homomorphism data: for each maximal class, the conjugator g
// realizing the restriction as conjugation, and its abelianization with the
// class's own coordinates dropped (where the conjugator is only defined up
// to the centralizer of the join).
struct KernelFResult {
  bool in_kernel = false;
  std::string diagnostic;  // when !in_kernel: which class failed and why
  std::vector<int> class_indices;       // maximal classes, ascending
  std::vector<Word> conjugators;        // aligned with class_indices
  std::vector<IntVector> f;             // aligned; entries over V, class zeroed
  bool f_zero() const;
};
KernelFResult kernel_f(const Graph& g, const ClassContext& ctx,
                       const GeneratorWord& word, int radius = 6);

// The unique representative of a kernel element that restricts to the
// identity on the join of the base class: the least free maximal class when
// one exists, else the construction over the least adjacent pair of maximal
// classes in Γ₀ (identity on J_[y], conjugation by an element of A_{L_[y]}
// on J_[z]). Requires Γ₀ with at least two vertices and a word in the
// kernel; throws std::invalid_argument otherwise.
Automorphism canonical_representative(const Graph& g, const ClassContext& ctx,
                                      const GeneratorWord& word,
                                      int radius = 6);

struct KPResult {
  enum class Outcome { in_K, in_KP_via_leaf_part, not_detected };
  Outcome outcome = Outcome::not_detected;
  int radius = 0;
  std::string note;
  // coefficient per leaf transvection, aligned with leaf_transvections(g,ctx)
  std::vector<long long> leaf_coefficients;
  KernelFResult k_part;  // populated when outcome != not_detected
};
// Semi-decision of membership in the kernel of the assembled projection:
// all projections must be inner within the search radius; then the leaf
// coefficients are read off the images of leaf-like vertices and the
// remainder is checked against the kernel of the restriction.
KPResult check_KP_membership(const Graph& g, const ClassContext& ctx,
                             const GeneratorWord& word, int radius = 6);

// Γ₀ a single vertex [v]: the leaf transvection basis t(u,w), u in L_[v],
// w in [v], plus the central class (always abelian) and Ltag. Equivalent
// characterizations of the singleton case are computed independently by
// singleton_conditions.
struct SingletonDecomposition {
  std::vector<LeafTransvection> tr_basis;
  VertexClass central_class;
  VertexSet link_set;
};
SingletonDecomposition singleton_decomposition(const Graph& g);

struct SingletonConditions {
  bool gamma0_singleton = false;
  bool center_nontrivial = false;
  bool graph_equals_join = false;
  bool consistent() const {
    return gamma0_singleton == center_nontrivial &&
           center_nontrivial == graph_equals_join;
  }
};
SingletonConditions singleton_conditions(const Graph& g);

// Generator words allow inverses through a sandwich identity
// (g^-1 = inv ∘ g ∘ inv for the vertex involved); helpers used by tests and
// by the leaf-part subtraction in check_KP_membership.
GeneratorWord inverse_word(const GeneratorWord& word);
GeneratorWord inner_word_specs(const Graph& g, const Word& h);

std::string generator_word_to_string(const Graph& g, const GeneratorWord& w);

}  // namespace raag
