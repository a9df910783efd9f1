#include "raag/verify_suites.hpp"

#include <algorithm>
#include <stdexcept>

#include "raag/automorphisms.hpp"
#include "raag/projection.hpp"
#include "raag/subgroups.hpp"
#include "raag/vertex_order.hpp"
#include "raag/words.hpp"

namespace raag {

void SuiteResult::fail(const std::string& msg) {
  pass = false;
  if (failures.size() < 20) failures.push_back(msg);
}

void SuiteResult::absorb(const SuiteResult& other) {
  checks += other.checks;
  if (!other.pass) pass = false;
  for (const std::string& f : other.failures)
    if (failures.size() < 20) failures.push_back(f);
}

const std::vector<std::string> suite_names = {
    "order-lemmas", "godelle-oracle", "generator-wellformed", "leaf-commute",
    "kernel-f"};

namespace {

std::string gdesc(const Graph& g) {
  std::string out = "n=" + std::to_string(g.size()) + " edges=";
  for (auto [u, v] : g.edges()) out += "{" + g.name(u) + g.name(v) + "}";
  return out;
}

void all_chains_from(const ClassPoset& poset, std::vector<int>& chain,
                     std::vector<std::vector<int>>& out) {
  out.push_back(chain);
  int last = chain.back();
  for (int j = 0; j < static_cast<int>(poset.classes.size()); ++j) {
    if (!poset.strictly_less(last, j)) continue;
    chain.push_back(j);
    all_chains_from(poset, chain, out);
    chain.pop_back();
  }
}

}  // namespace

SuiteResult suite_order_lemmas_on(const Graph& g) {
  SuiteResult r;
  r.name = "order-lemmas";
  int n = g.size();

  // transitivity of <=, and the distance-1 step lemma
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) {
        ++r.checks;
        if (leq(g, u, v) && leq(g, v, w)) {
          if (!leq(g, u, w))
            r.fail("transitivity fails at (" + g.name(u) + "," + g.name(v) +
                   "," + g.name(w) + ") on " + gdesc(g));
          if (distance(g, u, v) == 1 && distance(g, v, w).value_or(99) > 1)
            r.fail("distance-1 step lemma fails at (" + g.name(u) + "," +
                   g.name(v) + "," + g.name(w) + ") on " + gdesc(g));
        }
      }

  // the trichotomy for <= holds on connected graphs
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) {
      ++r.checks;
      if (leq_case(g, v, w) == LeqCase::disconnected_anomaly)
        r.fail("leq trichotomy fails at (" + g.name(v) + "," + g.name(w) +
               ") on " + gdesc(g));
    }

  try {
    ClassPoset poset = class_poset(g);

    // equal pairwise distance within each class
    for (const VertexClass& c : poset.classes) {
      std::vector<int> ms = c.members.to_vector();
      ++r.checks;
      for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
          if (distance(g, ms[i], ms[j]) != distance(g, ms[0], ms.back()))
            r.fail("class distances differ in " + class_to_string(g, c) +
                   " on " + gdesc(g));
    }

    // chain shape with abelian tail, over every strict chain of classes
    std::vector<std::vector<int>> chains;
    for (int i = 0; i < static_cast<int>(poset.classes.size()); ++i) {
      std::vector<int> chain{i};
      all_chains_from(poset, chain, chains);
    }
    for (const std::vector<int>& chain : chains) {
      std::vector<int> reps;
      for (int ci : chain) reps.push_back(poset.classes[ci].representative);
      ++r.checks;
      try {
        chain_shape(g, reps);
      } catch (const std::exception& e) {
        r.fail(std::string("chain shape: ") + e.what() + " on " + gdesc(g));
      }
    }

    // gamma0 is connected, its adjacency is representative-independent,
    // and every vertex lies in some maximal join
    GammaZero gz = gamma_zero(g, poset);
    ++r.checks;
    if (!gamma_zero_connected(gz)) r.fail("gamma0 disconnected on " + gdesc(g));
    VertexSet covered;
    for (int ci : gz.class_indices)
      covered = covered.unite(join_of_class(g, poset.classes[ci]).J);
    ++r.checks;
    if (covered != g.all())
      r.fail("maximal joins do not cover the vertices on " + gdesc(g));
  } catch (const std::exception& e) {
    r.fail(std::string("order analysis threw: ") + e.what() + " on " + gdesc(g));
  }
  return r;
}

SuiteResult suite_godelle_oracle_on(const Graph& g, int radius) {
  SuiteResult r;
  r.name = "godelle-oracle";
  int n = g.size();

  std::vector<Word> ball = enumerate_ball(g, radius);
  std::vector<std::uint64_t> supp(ball.size()), comm(ball.size());
  for (std::size_t i = 0; i < ball.size(); ++i) {
    supp[i] = support(g, ball[i]).bits();
    std::uint64_t mask = 0;
    for (int v = 0; v < n; ++v)
      if (commutes(g, ball[i], Word{{v, 1}})) mask |= std::uint64_t{1} << v;
    comm[i] = mask;
  }

  for (std::uint64_t th = 0; th < (std::uint64_t{1} << n); ++th) {
    VertexSet theta(th);
    std::uint64_t perp_bits = perp(g, theta).bits();
    for (std::size_t i = 0; i < ball.size(); ++i) {
      ++r.checks;
      bool in_special = (supp[i] & ~perp_bits) == 0;
      bool commutes_all = (comm[i] & th) == th;
      if (in_special != commutes_all) {
        r.fail("centralizer formula disagrees with the oracle for theta=" +
               set_to_string(g, theta) + " element " +
               word_to_string(g, ball[i]) + " on " + gdesc(g));
        break;
      }
    }
  }

  if (is_connected(g)) {
    try {
      ClassPoset poset = class_poset(g);
      GammaZero gz = gamma_zero(g, poset);
      for (int ci : gz.class_indices) {
        ++r.checks;
        JoinData jd = join_of_class(g, poset.classes[ci]);
        ncz_of_maximal_join(g, poset, jd);  // self-checking
        // the perp of a maximal join stays inside the class
        if (!perp(g, jd.J).subset_of(poset.classes[ci].members))
          r.fail("join perp escapes the class on " + gdesc(g));
      }
      for (auto [a, b] : gz.edges) {
        ++r.checks;
        adjacent_join_intersection(
            g, poset, join_of_class(g, poset.classes[gz.class_indices[a]]),
            join_of_class(g, poset.classes[gz.class_indices[b]]));
      }
    } catch (const std::exception& e) {
      r.fail(std::string("join formulas threw: ") + e.what() + " on " +
             gdesc(g));
    }
  }
  return r;
}

SuiteResult suite_generator_wellformed_on(const Graph& g, Rng& rng, int pairs) {
  SuiteResult r;
  r.name = "generator-wellformed";
  std::vector<GeneratorSpec> gens;
  std::vector<Automorphism> autos;
  try {
    gens = enumerate_laurence_generators(g);
    for (const GeneratorSpec& s : gens) {
      ++r.checks;
      Automorphism f = as_automorphism(g, s);
      VerificationReport rep = verify_automorphism(g, f);
      if (!rep.ok)
        r.fail("generator " + spec_to_string(g, s) + " fails verification (" +
               rep.violations.front() + ") on " + gdesc(g));
      abelianization_matrix(g, f);  // throws unless det = ±1
      // the stored inverse composes to the identity
      Automorphism inv{f.inverse_images, f.images};
      ++r.checks;
      if (!is_identity(g, compose(g, f, inv)))
        r.fail("generator " + spec_to_string(g, s) +
               " does not invert on " + gdesc(g));
      autos.push_back(std::move(f));
    }
    for (const std::vector<int>& p : enumerate_graph_symmetries(g)) {
      ++r.checks;
      Automorphism f = as_automorphism(g, GeneratorSpec::symmetry_of(p));
      if (!verify_automorphism(g, f).ok)
        r.fail("graph symmetry fails verification on " + gdesc(g));
    }
  } catch (const std::exception& e) {
    r.fail(std::string("generator enumeration threw: ") + e.what() + " on " +
           gdesc(g));
    return r;
  }
  if (!autos.empty()) {
    for (int i = 0; i < pairs; ++i) {
      const Automorphism& f = autos[rand_below(rng, autos.size())];
      const Automorphism& h = autos[rand_below(rng, autos.size())];
      ++r.checks;
      IntMatrix lhs = abelianization_matrix(g, compose(g, f, h));
      IntMatrix rhs =
          mat_mul(abelianization_matrix(g, f), abelianization_matrix(g, h));
      if (!(lhs == rhs))
        r.fail("abelianization is not multiplicative on " + gdesc(g));
    }
  }
  return r;
}

SuiteResult suite_leaf_commute_on(const Graph& g) {
  SuiteResult r;
  r.name = "leaf-commute";
  try {
    ClassContext ctx = make_class_context(g);
    std::vector<LeafTransvection> lts = leaf_transvections(g, ctx);
    std::vector<GeneratorSpec> pcs;
    for (const GeneratorSpec& s : enumerate_laurence_generators(g))
      if (s.kind == GeneratorSpec::Kind::partial_conjugation) pcs.push_back(s);
    for (const LeafTransvection& lt : lts) {
      Automorphism t = as_automorphism(
          g, GeneratorSpec::transvection_of(lt.v, lt.w));
      for (const GeneratorSpec& s : pcs) {
        Automorphism pc = as_automorphism(g, s);
        ++r.checks;
        if (!automorphisms_equal(g, compose(g, t, pc), compose(g, pc, t)))
          r.fail("t(" + g.name(lt.v) + "," + g.name(lt.w) +
                 ") does not commute with " + spec_to_string(g, s) + " on " +
                 gdesc(g));
      }
    }
  } catch (const std::exception& e) {
    r.fail(std::string("leaf-commute threw: ") + e.what() + " on " + gdesc(g));
  }
  return r;
}

namespace {

IntVector flatten_f(const KernelFResult& kf) {
  IntVector out;
  for (const IntVector& v : kf.f) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace

SuiteResult suite_kernel_f_on(const Graph& g, Rng& rng, int pairs, int radius) {
  SuiteResult r;
  r.name = "kernel-f";
  try {
    ClassContext ctx = make_class_context(g);
    // kernel generators: the enumerated partial conjugations whose
    // restrictions are inner on every maximal join
    std::vector<GeneratorSpec> kgens;
    for (const GeneratorSpec& s : enumerate_laurence_generators(g)) {
      if (s.kind != GeneratorSpec::Kind::partial_conjugation) continue;
      if (kernel_f(g, ctx, {s}, radius).in_kernel) kgens.push_back(s);
    }
    if (kgens.empty()) return r;

    auto random_product = [&](int maxlen) {
      GeneratorWord w;
      int len = 1 + static_cast<int>(rand_below(rng, maxlen));
      for (int i = 0; i < len; ++i)
        w.push_back(kgens[rand_below(rng, kgens.size())]);
      return w;
    };

    for (int i = 0; i < pairs; ++i) {
      GeneratorWord u = random_product(4);
      GeneratorWord v = random_product(4);
      GeneratorWord uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      KernelFResult fu = kernel_f(g, ctx, u, radius);
      KernelFResult fv = kernel_f(g, ctx, v, radius);
      KernelFResult fuv = kernel_f(g, ctx, uv, radius);
      ++r.checks;
      if (!fu.in_kernel || !fv.in_kernel || !fuv.in_kernel) {
        r.fail("kernel generator product left the kernel on " + gdesc(g));
        continue;
      }
      IntVector sum = flatten_f(fu);
      IntVector fv_flat = flatten_f(fv);
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += fv_flat[k];
      if (sum != flatten_f(fuv))
        r.fail("kernel_f is not additive on " + gdesc(g) + " for " +
               generator_word_to_string(g, u) + " × " +
               generator_word_to_string(g, v));
    }

    // words with f = 0 canonicalize to the identity (needs two maximal classes)
    if (ctx.gz.class_indices.size() >= 2) {
      std::vector<GeneratorWord> zero_words;
      for (const GeneratorSpec& s : kgens) {
        GeneratorWord w{s};
        GeneratorWord winv = inverse_word({s});
        w.insert(w.end(), winv.begin(), winv.end());
        zero_words.push_back(w);
      }
      if (kgens.size() >= 2) {
        GeneratorWord comm{kgens[0], kgens[1]};
        GeneratorWord inv01 = inverse_word({kgens[0], kgens[1]});
        comm.insert(comm.end(), inv01.begin(), inv01.end());
        zero_words.push_back(comm);
      }
      for (const GeneratorWord& w : zero_words) {
        KernelFResult kf = kernel_f(g, ctx, w, radius);
        ++r.checks;
        if (!kf.in_kernel) {
          r.fail("zero-candidate word left the kernel on " + gdesc(g));
          continue;
        }
        if (!kf.f_zero()) {
          r.fail("expected zero kernel_f on " + gdesc(g) + " for " +
                 generator_word_to_string(g, w));
          continue;
        }
        if (!is_identity(g, canonical_representative(g, ctx, w, radius)))
          r.fail("zero kernel_f word does not canonicalize to the identity on " +
                 gdesc(g));
      }
    }
  } catch (const std::exception& e) {
    r.fail(std::string("kernel-f threw: ") + e.what() + " on " + gdesc(g));
  }
  return r;
}

SuiteResult run_suite_on_graph(const std::string& name, const Graph& g,
                               const SuiteOptions& opts) {
  Rng rng(opts.seed);
  if (name == "order-lemmas") return suite_order_lemmas_on(g);
  if (name == "godelle-oracle") return suite_godelle_oracle_on(g, opts.radius);
  if (name == "generator-wellformed")
    return suite_generator_wellformed_on(g, rng, opts.pairs);
  if (name == "leaf-commute") return suite_leaf_commute_on(g);
  if (name == "kernel-f")
    return suite_kernel_f_on(g, rng, opts.pairs, opts.radius);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  Rng rng(opts.seed);
  SuiteResult total;
  total.name = name;
  if (name == "order-lemmas" || name == "generator-wellformed") {
    for (int i = 0; i < opts.count; ++i) {
      int n = 2 + static_cast<int>(rand_below(rng, opts.max_n - 1));
      Graph g = random_connected_graph(rng, n, opts.edge_p);
      total.absorb(name == "order-lemmas"
                       ? suite_order_lemmas_on(g)
                       : suite_generator_wellformed_on(g, rng, opts.pairs));
    }
    return total;
  }
  if (name == "godelle-oracle") {
    int cap = std::min(opts.max_n, 6);
    for (int n = 1; n <= cap; ++n)
      for (const Graph& g : connected_graphs_up_to_iso(n))
        total.absorb(suite_godelle_oracle_on(g, opts.radius));
    return total;
  }
  if (name == "leaf-commute" || name == "kernel-f") {
    for (int i = 0; i < opts.count; ++i) {
      int n = 3 + static_cast<int>(rand_below(rng, std::max(1, opts.max_n - 2)));
      Graph g = random_tree(rng, n);
      total.absorb(name == "leaf-commute"
                       ? suite_leaf_commute_on(g)
                       : suite_kernel_f_on(g, rng, opts.pairs, opts.radius));
    }
    return total;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace raag
