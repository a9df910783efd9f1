#include "raag/vertex_order.hpp"

#include <stdexcept>

namespace raag {

bool leq(const Graph& g, int v, int w) {
  g.check_vertex(v);
  g.check_vertex(w);
  return link(g, v).subset_of(star(g, w));
}

bool vertex_maximal(const Graph& g, int v) {
  for (int w = 0; w < g.size(); ++w)
    if (leq(g, v, w) && !leq(g, w, v)) return false;
  return true;
}

LeqCase leq_case(const Graph& g, int v, int w) {
  if (!leq(g, v, w)) return LeqCase::not_leq;
  if (v == w) return LeqCase::equal;
  std::optional<int> d = distance(g, v, w);
  if (d == 1 && star(g, v).subset_of(star(g, w))) return LeqCase::adjacent_star;
  if (d == 2 && link(g, v).subset_of(link(g, w)))
    return LeqCase::distance_two_link;
  // v <= w with d(v,w) > 2 forces lk(v) = ∅, i.e. a disconnected graph.
  return LeqCase::disconnected_anomaly;
}

std::vector<VertexClass> equivalence_classes(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument(
        "equivalence classes require a connected graph; factor the graph first");
  std::vector<VertexClass> out;
  VertexSet assigned;
  for (int v = 0; v < g.size(); ++v) {
    if (assigned.contains(v)) continue;
    VertexClass c;
    c.representative = v;
    c.members.insert(v);
    for (int w = v + 1; w < g.size(); ++w)
      if (leq(g, v, w) && leq(g, w, v)) c.members.insert(w);
    assigned = assigned.unite(c.members);
    c.abelian = true;
    for (int x : c.members.to_vector())
      for (int y : c.members.to_vector())
        if (x < y && !g.adjacent(x, y)) c.abelian = false;
    out.push_back(c);
  }
  return out;
}

std::vector<int> ClassPoset::maximal_indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (maximal[i]) out.push_back(static_cast<int>(i));
  return out;
}

ClassPoset class_poset(const Graph& g) {
  ClassPoset p;
  p.classes = equivalence_classes(g);
  int k = static_cast<int>(p.classes.size());
  p.leq.assign(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      p.leq[i][j] =
          leq(g, p.classes[i].representative, p.classes[j].representative);
  p.maximal.assign(k, true);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && p.leq[i][j] && !p.leq[j][i]) p.maximal[i] = false;
  p.class_of.assign(g.size(), -1);
  for (int i = 0; i < k; ++i)
    for (int v : p.classes[i].members.to_vector()) p.class_of[v] = i;
  return p;
}

GammaZero gamma_zero(const Graph& g, const ClassPoset& poset) {
  GammaZero gz;
  gz.class_indices = poset.maximal_indices();
  int m = static_cast<int>(gz.class_indices.size());
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const VertexClass& ca = poset.classes[gz.class_indices[a]];
      const VertexClass& cb = poset.classes[gz.class_indices[b]];
      bool adj = g.adjacent(ca.representative, cb.representative);
      // adjacency must not depend on the representatives chosen
      for (int x : ca.members.to_vector())
        for (int y : cb.members.to_vector())
          if (g.adjacent(x, y) != adj)
            throw std::logic_error(
                "gamma_zero: class adjacency depends on representatives (" +
                class_to_string(g, ca) + " vs " + class_to_string(g, cb) + ")");
      if (adj) gz.edges.emplace_back(a, b);
    }
  }
  return gz;
}

GammaZero gamma_zero(const Graph& g) { return gamma_zero(g, class_poset(g)); }

bool gamma_zero_connected(const GammaZero& gz) {
  int m = static_cast<int>(gz.class_indices.size());
  if (m == 0) return true;
  std::vector<std::vector<int>> adj(m);
  for (auto [a, b] : gz.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(m, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
  }
  return count == m;
}

int chain_shape(const Graph& g, const std::vector<int>& chain) {
  for (int v : chain) g.check_vertex(v);
  if (chain.empty()) throw std::invalid_argument("chain_shape: empty chain");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!leq(g, chain[i], chain[i + 1]) || leq(g, chain[i + 1], chain[i]))
      throw std::invalid_argument(
          "chain_shape: input is not a strictly increasing chain at position " +
          std::to_string(i));

  std::vector<int> gaps;  // distances between consecutive entries
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    std::optional<int> d = distance(g, chain[i], chain[i + 1]);
    if (!d || (*d != 1 && *d != 2))
      throw std::invalid_argument(
          "chain_shape: consecutive entries at distance other than 1 or 2 "
          "(disconnected graph?)");
    gaps.push_back(*d);
  }
  int j = 0;
  while (j < static_cast<int>(gaps.size()) && gaps[j] == 2) ++j;
  for (int i = j; i < static_cast<int>(gaps.size()); ++i)
    if (gaps[i] != 1)
      throw std::logic_error(
          "chain_shape: distance-2 gap after a distance-1 gap");
  // every vertex strictly above a distance-1 gap lies in an abelian class
  std::vector<VertexClass> classes = equivalence_classes(g);
  for (std::size_t i = j + 1; i < chain.size(); ++i) {
    for (const VertexClass& c : classes) {
      if (!c.members.contains(chain[i])) continue;
      if (!c.abelian)
        throw std::logic_error(
            "chain_shape: vertex above a distance-1 gap lies in a free class");
    }
  }
  return j;
}

std::string class_to_string(const Graph& g, const VertexClass& c) {
  return "[" + set_to_string(g, c.members) + "]";
}

}  // namespace raag
