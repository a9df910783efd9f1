#include "raag/report.hpp"

#include <sstream>

#include "raag/automorphisms.hpp"

namespace raag {

namespace {

std::string cls_name(const Graph& g, const VertexClass& c) {
  return class_to_string(g, c);
}

void report_factor(std::ostream& out, const Graph& g) {
  ClassContext ctx = make_class_context(g);
  const ClassPoset& poset = ctx.poset;

  out << "-- vertex classes --\n";
  for (const VertexClass& c : poset.classes)
    out << cls_name(g, c) << " kind=" << (c.abelian ? "abelian" : "free")
        << "\n";

  out << "-- class order --\n";
  bool any = false;
  for (std::size_t i = 0; i < poset.classes.size(); ++i)
    for (std::size_t j = 0; j < poset.classes.size(); ++j)
      if (i != j && poset.strictly_less(i, j)) {
        out << cls_name(g, poset.classes[i]) << " < "
            << cls_name(g, poset.classes[j]) << "\n";
        any = true;
      }
  if (!any) out << "(no strict relations)\n";
  out << "maximal:";
  for (int ci : ctx.maximal) out << " " << cls_name(g, poset.classes[ci]);
  out << "\n";

  out << "-- gamma0 --\n";
  out << "vertices:";
  for (int ci : ctx.gz.class_indices) out << " " << cls_name(g, poset.classes[ci]);
  out << "\n";
  out << "edges:";
  if (ctx.gz.edges.empty()) out << " (none)";
  for (auto [a, b] : ctx.gz.edges)
    out << " " << cls_name(g, poset.classes[ctx.gz.class_indices[a]]) << "--"
        << cls_name(g, poset.classes[ctx.gz.class_indices[b]]);
  out << "\n";
  out << "connected: " << (gamma_zero_connected(ctx.gz) ? "yes" : "no") << "\n";

  out << "-- joins --\n";
  for (std::size_t i = 0; i < poset.classes.size(); ++i) {
    const JoinData& jd = ctx.joins[i];
    out << cls_name(g, poset.classes[i]) << ": L=" << set_to_string(g, jd.L)
        << " J=" << set_to_string(g, jd.J);
    if (poset.maximal[i]) {
      NCZResult ncz = ncz_of_maximal_join(g, poset, jd);
      out << " N=" << set_to_string(g, ncz.normalizer)
          << " C=" << set_to_string(g, ncz.centralizer)
          << " Z=" << set_to_string(g, ncz.center);
    }
    out << "\n";
  }

  if (!ctx.gz.edges.empty()) {
    out << "-- adjacent join intersections --\n";
    for (auto [a, b] : ctx.gz.edges) {
      int ci = ctx.gz.class_indices[a];
      int cj = ctx.gz.class_indices[b];
      AdjacentJoinIntersection aji =
          adjacent_join_intersection(g, poset, ctx.joins[ci], ctx.joins[cj]);
      out << cls_name(g, poset.classes[ci]) << " & "
          << cls_name(g, poset.classes[cj])
          << ": J=" << set_to_string(g, aji.J_vw)
          << " C=Z=" << set_to_string(g, aji.ncz.center) << "\n";
    }
  }

  out << "-- laurence generators --\n";
  std::vector<GeneratorSpec> gens = enumerate_laurence_generators(g);
  using Kind = GeneratorSpec::Kind;
  auto list_kind = [&](Kind kind, const std::string& label) {
    std::vector<std::string> items;
    for (const GeneratorSpec& s : gens)
      if (s.kind == kind) items.push_back(spec_to_string(g, s));
    out << label << " (" << items.size() << "):";
    if (items.empty()) out << " (none)";
    for (const std::string& s : items) out << " " << s;
    out << "\n";
  };
  list_kind(Kind::inversion, "inversions");
  list_kind(Kind::inner, "inners");
  list_kind(Kind::transvection, "transvections");
  list_kind(Kind::partial_conjugation, "partial conjugations");
  out << "graph symmetries: " << enumerate_graph_symmetries(g).size()
      << " (incl. identity)\n";

  out << "-- leaf transvections --\n";
  std::vector<LeafTransvection> lts = leaf_transvections(g, ctx);
  out << "(" << lts.size() << "):";
  if (lts.empty()) out << " (none)";
  for (const LeafTransvection& lt : lts)
    out << " t(" << g.name(lt.v) << "," << g.name(lt.w) << ")";
  out << "\n";

  out << "-- kernel data for partial conjugations --\n";
  bool any_pc = false;
  for (const GeneratorSpec& s : gens) {
    if (s.kind != Kind::partial_conjugation) continue;
    any_pc = true;
    out << spec_to_string(g, s) << ":";
    KernelFResult kf = kernel_f(g, ctx, {s});
    if (!kf.in_kernel) {
      out << " not in the restriction kernel (" << kf.diagnostic << ")\n";
      continue;
    }
    for (std::size_t i = 0; i < kf.class_indices.size(); ++i)
      out << " f" << cls_name(g, poset.classes[kf.class_indices[i]]) << "="
          << int_vector_to_string(g, kf.f[i]);
    out << "\n";
  }
  if (!any_pc) out << "(no partial conjugations)\n";

  out << "-- singleton decomposition --\n";
  if (ctx.gz.singleton()) {
    SingletonDecomposition sd = singleton_decomposition(g);
    out << "central class: " << cls_name(g, sd.central_class) << "\n";
    out << "L: " << set_to_string(g, sd.link_set) << "\n";
    out << "leaf transvection basis (rank " << sd.tr_basis.size() << "):";
    if (sd.tr_basis.empty()) out << " (none)";
    for (const LeafTransvection& lt : sd.tr_basis)
      out << " t(" << g.name(lt.v) << "," << g.name(lt.w) << ")";
    out << "\n";
  } else {
    out << "not applicable (gamma0 has " << ctx.gz.class_indices.size()
        << " vertices)\n";
  }
}

}  // namespace

std::string analyze_report(const Graph& g) {
  std::ostringstream out;
  out << "== graph ==\n";
  out << "vertices (" << g.size() << "):";
  for (const auto& n : g.names()) out << " " << n;
  out << "\n";
  out << "edges (" << g.edge_count() << "):";
  if (g.edges().empty()) out << " (none)";
  for (auto [u, v] : g.edges())
    out << " {" << g.name(u) << "," << g.name(v) << "}";
  out << "\n";
  out << "dimension: " << dimension(g) << "\n";

  FreeProductFactors fp = free_product_factors(g);
  out << "free product: isolated vertices=" << fp.isolated_count
      << " non-trivial factors=" << fp.factors.size() << "\n";

  for (std::size_t i = 0; i < fp.factors.size(); ++i) {
    out << "\n== factor " << (i + 1) << ": "
        << set_to_string(g, fp.factor_sets[i]) << " ==\n";
    report_factor(out, fp.factors[i]);
  }
  return out.str();
}

std::string kernel_report(const Graph& g, const GeneratorWord& word,
                          int radius) {
  std::ostringstream out;
  ClassContext ctx = make_class_context(g);
  out << "kernel report\n";
  out << "word: " << generator_word_to_string(g, word) << "\n";

  KernelFResult kf = kernel_f(g, ctx, word, radius);
  if (!kf.in_kernel) {
    out << "restriction kernel: not a member (" << kf.diagnostic << ")\n";
  } else {
    for (std::size_t i = 0; i < kf.class_indices.size(); ++i) {
      int ci = kf.class_indices[i];
      out << "class " << cls_name(g, ctx.poset.classes[ci]) << ": restriction";
      RestrictedAutomorphism r = restrict_R(g, ctx, word, ci);
      for (const auto& [u, img] : r.images)
        out << " " << g.name(u) << "->" << word_to_string(g, img);
      out << " | conjugator " << word_to_string(g, kf.conjugators[i]);
      out << " | f=" << int_vector_to_string(g, kf.f[i]) << "\n";
    }
    out << "restriction kernel: member\n";
  }

  KPResult kp = check_KP_membership(g, ctx, word, radius);
  out << "projection kernel (radius " << kp.radius << "): ";
  switch (kp.outcome) {
    case KPResult::Outcome::in_K:
      out << "member via restriction kernel\n";
      break;
    case KPResult::Outcome::in_KP_via_leaf_part:
      out << "member with leaf part\n";
      break;
    case KPResult::Outcome::not_detected:
      out << "not detected (" << kp.note << ")\n";
      return out.str();
  }
  std::vector<LeafTransvection> lts = leaf_transvections(g, ctx);
  out << "leaf coefficients:";
  bool any = false;
  for (std::size_t i = 0; i < lts.size(); ++i) {
    if (kp.leaf_coefficients[i] == 0) continue;
    out << " t(" << g.name(lts[i].v) << "," << g.name(lts[i].w)
        << "):" << kp.leaf_coefficients[i];
    any = true;
  }
  if (!any) out << " (all zero)";
  out << "\n";
  return out.str();
}

std::string dot_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph raag {\n";
  for (const auto& n : g.names()) out << "  \"" << n << "\";\n";
  for (auto [u, v] : g.edges())
    out << "  \"" << g.name(u) << "\" -- \"" << g.name(v) << "\";\n";
  out << "}\n";
  return out.str();
}

std::string dot_gamma_zero(const Graph& g) {
  ClassPoset poset = class_poset(g);
  GammaZero gz = gamma_zero(g, poset);
  std::ostringstream out;
  out << "graph gamma0 {\n";
  for (int ci : gz.class_indices)
    out << "  \"" << set_to_string(g, poset.classes[ci].members) << "\";\n";
  for (auto [a, b] : gz.edges)
    out << "  \"" << set_to_string(g, poset.classes[gz.class_indices[a]].members)
        << "\" -- \""
        << set_to_string(g, poset.classes[gz.class_indices[b]].members)
        << "\";\n";
  out << "}\n";
  return out.str();
}

std::string dot_class_poset(const Graph& g) {
  ClassPoset poset = class_poset(g);
  int k = static_cast<int>(poset.classes.size());
  std::ostringstream out;
  out << "digraph class_poset {\n";
  out << "  rankdir=BT;\n";
  for (const VertexClass& c : poset.classes)
    out << "  \"" << set_to_string(g, c.members) << "\";\n";
  // covering relations only (Hasse diagram)
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j || !poset.strictly_less(i, j)) continue;
      bool covered = true;
      for (int m = 0; m < k && covered; ++m)
        if (m != i && m != j && poset.strictly_less(i, m) &&
            poset.strictly_less(m, j))
          covered = false;
      if (covered)
        out << "  \"" << set_to_string(g, poset.classes[i].members)
            << "\" -> \"" << set_to_string(g, poset.classes[j].members)
            << "\";\n";
    }
  out << "}\n";
  return out.str();
}

std::string singleton_report(const Graph& g) {
  std::ostringstream out;
  SingletonDecomposition sd = singleton_decomposition(g);
  out << "singleton decomposition\n";
  out << "central class: " << class_to_string(g, sd.central_class)
      << " kind=" << (sd.central_class.abelian ? "abelian" : "free") << "\n";
  out << "L: " << set_to_string(g, sd.link_set) << "\n";
  out << "leaf transvection basis (rank " << sd.tr_basis.size() << "):";
  if (sd.tr_basis.empty()) out << " (none)";
  for (const LeafTransvection& lt : sd.tr_basis)
    out << " t(" << g.name(lt.v) << "," << g.name(lt.w) << ")";
  out << "\n";
  return out.str();
}

}  // namespace raag
