#pragma once

#include <vector>

#include "raag/graph.hpp"
#include "raag/vertex_order.hpp"
#include "raag/words.hpp"

namespace raag {

// L and J of a class: L_[v] = lk(v) \ [v], J_[v] = L_[v] ∗ [v].
// Construction verifies that L is the same for every representative and
// that every member of L is adjacent to every member of the class (the join
// structure), so the data is representative-independent.
struct JoinData {
  VertexClass cls;
  VertexSet L;
  VertexSet J;
};
JoinData join_of_class(const Graph& g, const VertexClass& cls);

// Vertex sets defining the special subgroups N(A_Θ), C(A_Θ), Z(A_Θ).
struct NCZResult {
  VertexSet normalizer;   // Θ ∪ Θ⊥
  VertexSet centralizer;  // Θ⊥
  VertexSet center;       // Θ ∩ Θ⊥
};
NCZResult godelle_ncz(const Graph& g, VertexSet th);

// Specialization for the join of a maximal class: N = A_J, and
// C = Z = A_[v] when the class is abelian, trivial when it is free.
// Cross-checked against godelle_ncz(J); disagreement raises std::logic_error.
NCZResult ncz_of_maximal_join(const Graph& g, const ClassPoset& poset,
                              const JoinData& jd);

// For maximal classes adjacent in Γ₀: J_{v,w} = J_[v] ∩ J_[w] decomposes as
// the join [v] ∗ [w] ∗ (L_[v] ∩ L_[w]) (verified), with
// C = Z = Z([v]) ∪ Z([w]) ∪ Z(L_[v] ∩ L_[w]) and N = J_{v,w}.
// Cross-checked against godelle_ncz(J_{v,w}).
struct AdjacentJoinIntersection {
  VertexSet J_vw;
  NCZResult ncz;
};
AdjacentJoinIntersection adjacent_join_intersection(const Graph& g,
                                                    const ClassPoset& poset,
                                                    const JoinData& jv,
                                                    const JoinData& jw);

// Brute-force oracle: all elements of normal-form length <= radius that
// commute with every generator of th.
std::vector<Word> brute_centralizer(const Graph& g, VertexSet th, int radius);

}  // namespace raag
