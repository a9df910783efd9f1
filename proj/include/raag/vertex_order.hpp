#pragma once

#include <string>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

// v <= w  iff  lk(v) ⊆ st(w). This is the domination preorder on vertices;
// it induces a partial order on the ~-equivalence classes below.
bool leq(const Graph& g, int v, int w);

// v is maximal when nothing strictly dominates it; usable on any graph.
bool vertex_maximal(const Graph& g, int v);

// The three ways v <= w can hold, plus a diagnostic for the degenerate
// situation (possible only on disconnected graphs) where v <= w holds with
// d(v,w) > 2.
enum class LeqCase {
  not_leq,
  equal,              // v == w
  adjacent_star,      // d = 1 and st(v) ⊆ st(w)
  distance_two_link,  // d = 2 and lk(v) ⊆ lk(w)
  disconnected_anomaly,
};
LeqCase leq_case(const Graph& g, int v, int w);

struct VertexClass {
  int representative = -1;  // least member in vertex order
  VertexSet members;
  bool abelian = true;  // singleton, or members pairwise adjacent
};

// Partition of a connected graph's vertices into ~-classes (v ~ w iff
// v <= w and w <= v), ordered by representative. Throws on disconnected
// input; callers factor first via free_product_factors.
std::vector<VertexClass> equivalence_classes(const Graph& g);

struct ClassPoset {
  std::vector<VertexClass> classes;    // ordered by representative
  std::vector<std::vector<bool>> leq;  // leq[i][j]: class i <= class j (reflexive)
  std::vector<bool> maximal;
  std::vector<int> class_of;  // vertex index -> class index

  bool strictly_less(int i, int j) const { return leq[i][j] && !leq[j][i]; }
  std::vector<int> maximal_indices() const;
};
ClassPoset class_poset(const Graph& g);

// Graph on the maximal classes; [v]–[w] is an edge iff representatives are
// adjacent in Γ. Construction verifies that adjacency does not depend on
// the choice of representatives.
struct GammaZero {
  std::vector<int> class_indices;           // into ClassPoset::classes, ascending
  std::vector<std::pair<int, int>> edges;   // positions into class_indices, i < j
  bool singleton() const { return class_indices.size() == 1; }
};
GammaZero gamma_zero(const Graph& g, const ClassPoset& poset);
GammaZero gamma_zero(const Graph& g);

bool gamma_zero_connected(const GammaZero& gz);

// For a strictly increasing chain of class representatives, the breakpoint
// j: gaps 0..j-1 have distance 2, gaps j.. have distance 1 (j = number of
// leading distance-2 gaps). Verifies the gap pattern and that every vertex
// strictly above a distance-1 gap lies in an abelian class; violations of
// those two facts are impossible for valid chains on connected graphs and
// raise std::logic_error.
int chain_shape(const Graph& g, const std::vector<int>& chain);

std::string class_to_string(const Graph& g, const VertexClass& c);

}  // namespace raag
