#include "raag/projection.hpp"

#include <algorithm>
#include <stdexcept>

namespace raag {

ClassContext make_class_context(const Graph& g) {
  ClassContext ctx;
  ctx.poset = class_poset(g);
  ctx.gz = gamma_zero(g, ctx.poset);
  for (const VertexClass& c : ctx.poset.classes)
    ctx.joins.push_back(join_of_class(g, c));
  ctx.maximal = ctx.poset.maximal_indices();
  return ctx;
}

namespace {

void check_maximal(const ClassContext& ctx, int class_index) {
  if (class_index < 0 ||
      class_index >= static_cast<int>(ctx.poset.classes.size()))
    throw std::invalid_argument("class index out of range");
  if (!ctx.poset.maximal[class_index])
    throw std::invalid_argument("operation requires a maximal class");
}

Word single(int v) { return {{v, 1}}; }

}  // namespace

PreservingRep preserving_representative(const Graph& g, const ClassContext& ctx,
                                        const GeneratorWord& word,
                                        int class_index) {
  using Kind = GeneratorSpec::Kind;
  check_maximal(ctx, class_index);
  const VertexSet J = ctx.joins[class_index].J;
  const VertexSet members = ctx.poset.classes[class_index].members;

  PreservingRep out;
  out.full = identity_automorphism(g);
  Automorphism raw = identity_automorphism(g);
  Word correction;  // out.full = inner_by_word(correction) ∘ raw

  for (const GeneratorSpec& spec : word) {
    validate_generator_spec(g, spec);
    if (spec.kind == Kind::symmetry)
      throw std::invalid_argument(
          "generator words are over the pure generators; symmetries are not allowed");
    Automorphism raw_piece = as_automorphism(g, spec);
    Automorphism piece = raw_piece;
    bool correct = false;
    // Conjugations from outside the join move A_J off itself exactly when
    // they touch it; composing with the inverse inner automorphism fixes
    // that, and only that, case.
    if (spec.kind == Kind::partial_conjugation)
      correct = !J.contains(spec.v) && spec.component.intersects(J);
    else if (spec.kind == Kind::inner)
      correct = !J.contains(spec.v);
    if (correct) {
      Word x = single(spec.v);
      // full_k = inner(correction_k) ∘ raw_k, so inserting inner(x^-1)
      // before the new piece multiplies the correction by raw_k(x^-1)
      correction = multiply(correction, apply(g, raw, invert(x)));
      piece = compose(g, inner_by_word(g, invert(x)), piece);
    }
    out.full = compose(g, out.full, piece);
    raw = compose(g, raw, raw_piece);
  }
  out.inner_correction = normal_form(g, correction);

  for (int m : members.to_vector())
    if (!support(g, out.full.images[m]).subset_of(members))
      throw std::logic_error(
          "preserving representative does not preserve the class subgroup at " +
          g.name(m) + " (image " + word_to_string(g, out.full.images[m]) + ")");
  for (int u : J.to_vector())
    if (!support(g, out.full.images[u]).subset_of(J))
      throw std::logic_error(
          "preserving representative does not preserve the join subgroup at " +
          g.name(u) + " (image " + word_to_string(g, out.full.images[u]) + ")");
  return out;
}

RestrictedAutomorphism restrict_R(const Graph& g, const ClassContext& ctx,
                                  const GeneratorWord& word, int class_index) {
  PreservingRep rep = preserving_representative(g, ctx, word, class_index);
  RestrictedAutomorphism out;
  out.class_index = class_index;
  out.join = ctx.joins[class_index].J;
  for (int u : out.join.to_vector()) out.images[u] = rep.full.images[u];
  for (auto [u, v] : g.edges())
    if (out.join.contains(u) && out.join.contains(v) &&
        !commutes(g, out.images[u], out.images[v]))
      throw std::logic_error("restriction violates the relations of the join");
  return out;
}

ProjectedAutomorphism project_restriction(const Graph& g,
                                          const ClassContext& ctx,
                                          const RestrictedAutomorphism& r) {
  const VertexSet members = ctx.poset.classes[r.class_index].members;
  ProjectedAutomorphism out;
  out.class_index = r.class_index;
  out.link_set = ctx.joins[r.class_index].L;
  for (int u : out.link_set.to_vector()) {
    Word img;
    for (const Letter& l : r.images.at(u))
      if (!members.contains(l.gen)) img.push_back(l);
    out.images[u] = normal_form(g, img);
  }
  for (auto [u, v] : g.edges())
    if (out.link_set.contains(u) && out.link_set.contains(v) &&
        !commutes(g, out.images[u], out.images[v]))
      throw std::logic_error("projection violates the relations of the link");
  return out;
}

ProjectedAutomorphism project_P(const Graph& g, const ClassContext& ctx,
                                const GeneratorWord& word, int class_index) {
  return project_restriction(g, ctx, restrict_R(g, ctx, word, class_index));
}

Word apply_projected(const Graph& g, const ProjectedAutomorphism& p,
                     const Word& w) {
  Word out;
  for (const Letter& l : w) {
    auto it = p.images.find(l.gen);
    if (it == p.images.end())
      throw std::invalid_argument("apply_projected: letter outside the link");
    Word img = l.sign > 0 ? it->second : invert(it->second);
    out.insert(out.end(), img.begin(), img.end());
  }
  return normal_form(g, out);
}

ProjectedAutomorphism compose_projected(const Graph& g,
                                        const ProjectedAutomorphism& f,
                                        const ProjectedAutomorphism& h) {
  if (f.class_index != h.class_index)
    throw std::invalid_argument("compose_projected: different base classes");
  ProjectedAutomorphism out;
  out.class_index = f.class_index;
  out.link_set = f.link_set;
  for (const auto& [u, img] : h.images) out.images[u] = apply_projected(g, f, img);
  return out;
}

bool projected_equal(const Graph& g, const ProjectedAutomorphism& f,
                     const ProjectedAutomorphism& h) {
  if (f.link_set != h.link_set) return false;
  for (const auto& [u, img] : f.images)
    if (!equal(g, img, h.images.at(u))) return false;
  return true;
}

InnerSearchResult projected_inner_search(const Graph& g,
                                         const ProjectedAutomorphism& p,
                                         int radius) {
  InnerSearchResult out;
  // conjugation leaves the abelianization unchanged
  for (const auto& [u, img] : p.images) {
    IntVector ab = abelianize(g, img);
    for (int v = 0; v < g.size(); ++v)
      if (ab[v] != (v == u ? 1 : 0)) {
        out.status = InnerSearchResult::Status::certified_not_inner;
        return out;
      }
  }
  for (const Word& h : enumerate_ball(g, radius, p.link_set)) {
    bool match = true;
    for (const auto& [u, img] : p.images)
      if (!equal(g, img, conjugate_word(h, single(u)))) {
        match = false;
        break;
      }
    if (match) {
      out.status = InnerSearchResult::Status::found;
      out.conjugator = h;
      return out;
    }
  }
  out.status = InnerSearchResult::Status::exhausted;
  return out;
}

RPBundle assemble_RP(const Graph& g, const ClassContext& ctx,
                     const GeneratorWord& word) {
  RPBundle out;
  for (int ci : ctx.maximal) {
    out.restrictions.push_back(restrict_R(g, ctx, word, ci));
    out.projections.push_back(project_restriction(g, ctx, out.restrictions.back()));
  }
  return out;
}

std::vector<LeafLikeClass> leaf_like_classes(const Graph& g,
                                             const ClassContext& ctx) {
  std::vector<LeafLikeClass> out;
  int k = static_cast<int>(ctx.poset.classes.size());
  for (int ci = 0; ci < k; ++ci) {
    const VertexSet L = ctx.joins[ci].L;
    // L is a union of classes
    for (int cj = 0; cj < k; ++cj) {
      VertexSet m = ctx.poset.classes[cj].members;
      if (m.intersects(L) && !m.subset_of(L))
        throw std::logic_error("link set " + set_to_string(g, L) +
                               " is not a union of classes");
    }
    std::vector<int> partners;
    for (int mi : ctx.maximal)
      if (ctx.poset.classes[mi].members.subset_of(L)) partners.push_back(mi);
    if (partners.size() != 1) continue;
    if (!ctx.poset.strictly_less(ci, partners[0])) continue;
    if (!ctx.poset.classes[partners[0]].abelian)
      throw std::logic_error(
          "leaf-like partner class is free, contradicting the chain lemma");
    LeafLikeClass ll;
    ll.class_index = ci;
    ll.partner_index = partners[0];
    out.push_back(ll);
  }
  return out;
}

std::vector<LeafTransvection> leaf_transvections(const Graph& g,
                                                 const ClassContext& ctx) {
  std::vector<LeafTransvection> out;
  for (const LeafLikeClass& ll : leaf_like_classes(g, ctx))
    for (int v : ctx.poset.classes[ll.class_index].members.to_vector())
      for (int w : ctx.poset.classes[ll.partner_index].members.to_vector()) {
        if (!leq(g, v, w))
          throw std::logic_error("leaf transvection candidate violates v <= w");
        LeafTransvection lt;
        lt.v = v;
        lt.w = w;
        out.push_back(lt);
      }
  return out;
}

bool KernelFResult::f_zero() const {
  for (const IntVector& vec : f)
    for (long long x : vec)
      if (x != 0) return false;
  return true;
}

KernelFResult kernel_f(const Graph& g, const ClassContext& ctx,
                       const GeneratorWord& word, int radius) {
  KernelFResult out;
  out.class_indices = ctx.maximal;
  for (int ci : ctx.maximal) {
    PreservingRep rep = preserving_representative(g, ctx, word, ci);
    const VertexSet J = ctx.joins[ci].J;
    const VertexSet members = ctx.poset.classes[ci].members;
    std::vector<int> jverts = J.to_vector();

    auto works = [&](const Word& h) {
      for (int u : jverts)
        if (!equal(g, rep.full.images[u], conjugate_word(h, single(u))))
          return false;
      return true;
    };

    Word conj;
    bool have = false;
    bool all_fixed = true;
    for (int u : jverts)
      if (rep.full.images[u] != single(u)) all_fixed = false;
    if (all_fixed) {
      have = true;  // identity restriction, conjugator 1
    } else {
      // per-generator conjugator candidates, most-moved generator first
      std::vector<std::pair<int, Word>> candidates;
      std::vector<int> order = jverts;
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return rep.full.images[a].size() > rep.full.images[b].size();
      });
      for (int u : order) {
        if (rep.full.images[u] == single(u)) continue;
        std::optional<Word> h =
            extract_conjugator(g, single(u), rep.full.images[u]);
        if (!h) {
          out.diagnostic = "restriction to " +
                           class_to_string(g, ctx.poset.classes[ci]) +
                           ": image of " + g.name(u) +
                           " is not exhibited as a conjugate of " + g.name(u);
          return out;
        }
        bool dup = false;
        for (const auto& [v0, h0] : candidates) dup = dup || h0 == *h;
        if (!dup) candidates.emplace_back(u, *h);
      }
      for (const auto& [u0, h] : candidates) {
        if (works(h)) {
          conj = h;
          have = true;
          break;
        }
      }
      if (!have) {
        // a candidate for u is off by an element of C(u) = A_{st(u)};
        // search that centralizer's ball for the adjustment
        for (const auto& [u0, h] : candidates) {
          for (const Word& z : enumerate_ball(g, radius, star(g, u0))) {
            Word h2 = normal_form(g, multiply(h, z));
            if (works(h2)) {
              conj = h2;
              have = true;
              break;
            }
          }
          if (have) break;
        }
      }
      if (!have) {
        out.diagnostic =
            "restriction to " + class_to_string(g, ctx.poset.classes[ci]) +
            " is not inner: conjugator candidates could not be reconciled "
            "within radius " +
            std::to_string(radius);
        return out;
      }
    }
    IntVector fv = abelianize(g, conj);
    for (int m : members.to_vector()) fv[m] = 0;  // defined on V - [v] only
    out.conjugators.push_back(conj);
    out.f.push_back(std::move(fv));
  }
  out.in_kernel = true;
  return out;
}

namespace {

// psi = inner(conjugator)^-1 ∘ preserving representative: restricts to the
// identity on the join of the class. net satisfies psi = c(net) ∘ raw word.
struct NormalizedRep {
  Automorphism psi;
  Word net;
};
NormalizedRep normalized_rep(const Graph& g, const ClassContext& ctx,
                             const GeneratorWord& word, int ci,
                             const Word& conjugator) {
  PreservingRep rep = preserving_representative(g, ctx, word, ci);
  NormalizedRep out;
  out.psi = compose(g, inner_by_word(g, invert(conjugator)), rep.full);
  out.net = normal_form(g, multiply(invert(conjugator), rep.inner_correction));
  return out;
}

}  // namespace

Automorphism canonical_representative(const Graph& g, const ClassContext& ctx,
                                      const GeneratorWord& word, int radius) {
  if (ctx.gz.class_indices.size() < 2)
    throw std::invalid_argument(
        "canonical representatives require at least two maximal classes; "
        "use singleton_decomposition");
  KernelFResult kf = kernel_f(g, ctx, word, radius);
  if (!kf.in_kernel)
    throw std::invalid_argument("word is not in the restriction kernel: " +
                                kf.diagnostic);
  auto conj_of = [&](int ci) -> const Word& {
    for (std::size_t i = 0; i < kf.class_indices.size(); ++i)
      if (kf.class_indices[i] == ci) return kf.conjugators[i];
    throw std::logic_error("class missing from kernel data");
  };

  int free_ci = -1;
  for (int ci : ctx.maximal)
    if (!ctx.poset.classes[ci].abelian) {
      free_ci = ci;
      break;
    }

  Automorphism phi0;
  int base_ci;
  if (free_ci >= 0) {
    // unique representative restricting to the identity on the free join
    base_ci = free_ci;
    phi0 = normalized_rep(g, ctx, word, free_ci, conj_of(free_ci)).psi;
  } else {
    // all maximal classes abelian: least adjacent pair [y],[z] in Γ₀
    if (ctx.gz.edges.empty())
      throw std::logic_error("gamma_zero of a connected graph has no edges");
    auto [a, b] = ctx.gz.edges.front();
    int y = ctx.gz.class_indices[a];
    int z = ctx.gz.class_indices[b];
    base_ci = y;
    NormalizedRep ry = normalized_rep(g, ctx, word, y, conj_of(y));
    NormalizedRep rz = normalized_rep(g, ctx, word, z, conj_of(z));
    // psi_y = c(a0) ∘ psi_z with a0 central in the join intersection
    Word a0 = normal_form(g, multiply(ry.net, invert(rz.net)));
    AdjacentJoinIntersection aji = adjacent_join_intersection(
        g, ctx.poset, ctx.joins[y], ctx.joins[z]);
    if (!support(g, a0).subset_of(aji.ncz.centralizer))
      throw std::logic_error(
          "representative difference is not central in the join intersection: " +
          word_to_string(g, a0));
    // split a0 = r · s, r in A_[y], s in A_{L_[y]}; the factors commute
    Word r, s;
    for (const Letter& l : a0)
      (ctx.poset.classes[y].members.contains(l.gen) ? r : s).push_back(l);
    phi0 = compose(g, inner_by_word(g, invert(r)), ry.psi);
  }
  for (int u : ctx.joins[base_ci].J.to_vector())
    if (phi0.images[u] != single(u))
      throw std::logic_error(
          "canonical representative is not the identity on the base join");
  return phi0;
}

KPResult check_KP_membership(const Graph& g, const ClassContext& ctx,
                             const GeneratorWord& word, int radius) {
  KPResult out;
  out.radius = radius;
  RPBundle rpb = assemble_RP(g, ctx, word);

  std::vector<Word> inner_conj(ctx.maximal.size());
  for (std::size_t k = 0; k < ctx.maximal.size(); ++k) {
    InnerSearchResult isr = projected_inner_search(g, rpb.projections[k], radius);
    if (isr.status == InnerSearchResult::Status::certified_not_inner) {
      out.note = "projection at class " +
                 class_to_string(g, ctx.poset.classes[ctx.maximal[k]]) +
                 " is not inner (abelianization obstruction); not in the "
                 "projection kernel";
      return out;
    }
    if (isr.status == InnerSearchResult::Status::exhausted) {
      out.note = "no inner conjugator within radius " + std::to_string(radius) +
                 " for the projection at class " +
                 class_to_string(g, ctx.poset.classes[ctx.maximal[k]]);
      return out;
    }
    inner_conj[k] = isr.conjugator;
  }

  std::vector<LeafLikeClass> lls = leaf_like_classes(g, ctx);
  std::vector<LeafTransvection> lts = leaf_transvections(g, ctx);
  out.leaf_coefficients.assign(lts.size(), 0);

  auto leaf_partner_of = [&](int ci) -> int {
    for (const LeafLikeClass& ll : lls)
      if (ll.class_index == ci) return ll.partner_index;
    return -1;
  };

  // read leaf coefficients off the L-images once the projection is trivial
  for (std::size_t k = 0; k < ctx.maximal.size(); ++k) {
    int wi = ctx.maximal[k];
    NormalizedRep nr;
    {
      PreservingRep rep = preserving_representative(g, ctx, word, wi);
      nr.psi = compose(g, inner_by_word(g, invert(inner_conj[k])), rep.full);
    }
    const VertexSet members = ctx.poset.classes[wi].members;
    for (int v : ctx.joins[wi].L.to_vector()) {
      Word x = normal_form(g, multiply(invert(single(v)), nr.psi.images[v]));
      if (!support(g, x).subset_of(members)) {
        out.note = "image of " + g.name(v) +
                   " is not congruent to itself modulo the partner class";
        return out;
      }
      if (x.empty()) continue;
      int vc = ctx.poset.class_of[v];
      if (leaf_partner_of(vc) != wi) {
        out.note = "nontrivial partner-class part at non-leaf-like vertex " +
                   g.name(v);
        return out;
      }
      IntVector ab = abelianize(g, x);
      for (std::size_t i = 0; i < lts.size(); ++i)
        if (lts[i].v == v && members.contains(lts[i].w))
          out.leaf_coefficients[i] = ab[lts[i].w];
    }
  }

  // subtract the leaf part and test the remainder against the restriction kernel
  GeneratorWord remainder = word;
  for (std::size_t i = 0; i < lts.size(); ++i) {
    long long c = out.leaf_coefficients[i];
    GeneratorSpec t = GeneratorSpec::transvection_of(lts[i].v, lts[i].w);
    if (c > 0) {
      GeneratorWord tinv = inverse_word({t});
      for (long long rep = 0; rep < c; ++rep)
        remainder.insert(remainder.end(), tinv.begin(), tinv.end());
    } else {
      for (long long rep = 0; rep < -c; ++rep) remainder.push_back(t);
    }
  }
  out.k_part = kernel_f(g, ctx, remainder, radius);
  if (!out.k_part.in_kernel) {
    out.note = "remainder after removing the leaf part is not in the "
               "restriction kernel: " +
               out.k_part.diagnostic;
    return out;
  }
  bool leaf_zero = true;
  for (long long c : out.leaf_coefficients) leaf_zero = leaf_zero && c == 0;
  out.outcome = leaf_zero ? KPResult::Outcome::in_K
                          : KPResult::Outcome::in_KP_via_leaf_part;
  return out;
}

SingletonDecomposition singleton_decomposition(const Graph& g) {
  ClassContext ctx = make_class_context(g);
  if (!ctx.gz.singleton())
    throw std::invalid_argument(
        "singleton decomposition requires gamma_zero with exactly one vertex");
  int ci = ctx.gz.class_indices[0];
  const VertexClass& cls = ctx.poset.classes[ci];
  if (!cls.abelian)
    throw std::logic_error("the unique maximal class must be abelian");
  if (ctx.joins[ci].J != g.all())
    throw std::logic_error("the unique maximal join must be the whole graph");
  SingletonDecomposition out;
  out.central_class = cls;
  out.link_set = ctx.joins[ci].L;
  for (int u : out.link_set.to_vector())
    for (int w : cls.members.to_vector()) {
      if (!leq(g, u, w))
        throw std::logic_error("leaf transvection basis candidate violates u <= w");
      LeafTransvection lt;
      lt.v = u;
      lt.w = w;
      out.tr_basis.push_back(lt);
    }
  return out;
}

SingletonConditions singleton_conditions(const Graph& g) {
  SingletonConditions out;
  ClassPoset poset = class_poset(g);
  out.gamma0_singleton = poset.maximal_indices().size() == 1;
  out.center_nontrivial = !godelle_ncz(g, g.all()).center.empty();
  // the whole graph is the join of an abelian class
  out.graph_equals_join = false;
  for (const VertexClass& c : poset.classes)
    if (c.abelian && join_of_class(g, c).J == g.all())
      out.graph_equals_join = true;
  return out;
}

GeneratorWord inverse_word(const GeneratorWord& word) {
  using Kind = GeneratorSpec::Kind;
  GeneratorWord out;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (it->kind) {
      case Kind::inversion:
        out.push_back(*it);
        break;
      case Kind::transvection: {
        GeneratorSpec inv = GeneratorSpec::inversion_of(it->w);
        out.push_back(inv);
        out.push_back(*it);
        out.push_back(inv);
        break;
      }
      case Kind::partial_conjugation:
      case Kind::inner: {
        GeneratorSpec inv = GeneratorSpec::inversion_of(it->v);
        out.push_back(inv);
        out.push_back(*it);
        out.push_back(inv);
        break;
      }
      case Kind::symmetry: {
        std::vector<int> p(it->permutation.size());
        for (std::size_t v = 0; v < p.size(); ++v) p[it->permutation[v]] = v;
        out.push_back(GeneratorSpec::symmetry_of(std::move(p)));
        break;
      }
    }
  }
  return out;
}

GeneratorWord inner_word_specs(const Graph& g, const Word& h) {
  GeneratorWord out;
  for (const Letter& l : h) {
    g.check_vertex(l.gen);
    if (l.sign > 0) {
      out.push_back(GeneratorSpec::inner_of(l.gen));
    } else {
      GeneratorSpec inv = GeneratorSpec::inversion_of(l.gen);
      out.push_back(inv);
      out.push_back(GeneratorSpec::inner_of(l.gen));
      out.push_back(inv);
    }
  }
  return out;
}

std::string generator_word_to_string(const Graph& g, const GeneratorWord& w) {
  if (w.empty()) return "(identity)";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += spec_to_string(g, w[i]);
  }
  return out;
}

}  // namespace raag
