#include "raag/subgroups.hpp"

#include <stdexcept>

namespace raag {

JoinData join_of_class(const Graph& g, const VertexClass& cls) {
  g.check_subset(cls.members);
  if (cls.members.empty() || !cls.members.contains(cls.representative))
    throw std::invalid_argument("join_of_class: malformed class");
  JoinData jd;
  jd.cls = cls;
  jd.L = link(g, cls.representative).minus(cls.members);
  jd.J = jd.L.unite(cls.members);
  for (int m : cls.members.to_vector()) {
    if (link(g, m).minus(cls.members) != jd.L)
      throw std::logic_error("join_of_class: L depends on the representative for " +
                             class_to_string(g, cls));
    for (int u : jd.L.to_vector())
      if (!g.adjacent(m, u))
        throw std::logic_error("join_of_class: " + g.name(u) +
                               " in L is not adjacent to member " + g.name(m));
  }
  return jd;
}

NCZResult godelle_ncz(const Graph& g, VertexSet th) {
  g.check_subset(th);
  VertexSet p = perp(g, th);
  return {th.unite(p), p, th.intersect(p)};
}

namespace {

int class_index_of(const ClassPoset& poset, const VertexClass& cls) {
  for (std::size_t i = 0; i < poset.classes.size(); ++i)
    if (poset.classes[i].members == cls.members) return static_cast<int>(i);
  throw std::invalid_argument("class does not belong to this graph's poset");
}

}  // namespace

NCZResult ncz_of_maximal_join(const Graph& g, const ClassPoset& poset,
                              const JoinData& jd) {
  int ci = class_index_of(poset, jd.cls);
  if (!poset.maximal[ci])
    throw std::invalid_argument("ncz_of_maximal_join: class is not maximal");
  NCZResult out;
  out.normalizer = jd.J;
  out.centralizer = jd.cls.abelian ? jd.cls.members : VertexSet{};
  out.center = out.centralizer;
  NCZResult direct = godelle_ncz(g, jd.J);
  if (direct.normalizer != out.normalizer ||
      direct.centralizer != out.centralizer || direct.center != out.center)
    throw std::logic_error(
        "ncz_of_maximal_join: formula disagrees with the direct computation for " +
        class_to_string(g, jd.cls));
  return out;
}

AdjacentJoinIntersection adjacent_join_intersection(const Graph& g,
                                                    const ClassPoset& poset,
                                                    const JoinData& jv,
                                                    const JoinData& jw) {
  int iv = class_index_of(poset, jv.cls);
  int iw = class_index_of(poset, jw.cls);
  if (!poset.maximal[iv] || !poset.maximal[iw])
    throw std::invalid_argument("adjacent_join_intersection: classes must be maximal");
  if (iv == iw ||
      !g.adjacent(jv.cls.representative, jw.cls.representative))
    throw std::invalid_argument(
        "adjacent_join_intersection: classes must be distinct and adjacent");

  AdjacentJoinIntersection out;
  out.J_vw = jv.J.intersect(jw.J);
  VertexSet ll = jv.L.intersect(jw.L);

  // the intersection decomposes as the join [v] ∗ [w] ∗ (L_[v] ∩ L_[w])
  if (out.J_vw != jv.cls.members.unite(jw.cls.members).unite(ll))
    throw std::logic_error("adjacent_join_intersection: set decomposition failed");
  auto fully_adjacent = [&](VertexSet a, VertexSet b) {
    for (int x : a.to_vector())
      for (int y : b.to_vector())
        if (!g.adjacent(x, y)) return false;
    return true;
  };
  if (!fully_adjacent(jv.cls.members, jw.cls.members) ||
      !fully_adjacent(jv.cls.members, ll) || !fully_adjacent(jw.cls.members, ll))
    throw std::logic_error("adjacent_join_intersection: join structure failed");

  VertexSet z = godelle_ncz(g, jv.cls.members)
                    .center.unite(godelle_ncz(g, jw.cls.members).center)
                    .unite(godelle_ncz(g, ll).center);
  out.ncz.normalizer = out.J_vw;
  out.ncz.centralizer = z;
  out.ncz.center = z;

  NCZResult direct = godelle_ncz(g, out.J_vw);
  if (direct.normalizer != out.ncz.normalizer ||
      direct.centralizer != out.ncz.centralizer ||
      direct.center != out.ncz.center)
    throw std::logic_error(
        "adjacent_join_intersection: formula disagrees with the direct computation");
  return out;
}

std::vector<Word> brute_centralizer(const Graph& g, VertexSet th, int radius) {
  g.check_subset(th);
  std::vector<Word> out;
  std::vector<int> gens = th.to_vector();
  for (const Word& w : enumerate_ball(g, radius)) {
    bool central = true;
    for (int v : gens) {
      if (!commutes(g, w, Word{{v, 1}})) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(w);
  }
  return out;
}

}  // namespace raag
