#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "raag/graph.hpp"
#include "raag/graph_gen.hpp"

namespace raag {

struct SuiteOptions {
  std::uint64_t seed = 1;
  int count = 100;      // number of random graphs (batch mode)
  int max_n = 8;        // largest vertex count
  double edge_p = 0.35;
  int radius = 6;       // ball radius for oracle / inner searches
  int pairs = 50;       // random pair checks where applicable
};

struct SuiteResult {
  std::string name;
  bool pass = true;
  long checks = 0;
  std::vector<std::string> failures;

  void fail(const std::string& msg);
  void absorb(const SuiteResult& other);
};

extern const std::vector<std::string> suite_names;

// Per-graph checks. Graphs must be connected except where noted.
SuiteResult suite_order_lemmas_on(const Graph& g);
SuiteResult suite_godelle_oracle_on(const Graph& g, int radius);
SuiteResult suite_generator_wellformed_on(const Graph& g, Rng& rng, int pairs);
SuiteResult suite_leaf_commute_on(const Graph& g);
SuiteResult suite_kernel_f_on(const Graph& g, Rng& rng, int pairs, int radius);

// Batch drivers. order-lemmas, generator-wellformed: seeded random
// connected graphs; godelle-oracle: all connected graphs up to isomorphism
// with <= max_n (capped at 6) vertices; leaf-commute, kernel-f: seeded
// random trees.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);
SuiteResult run_suite_on_graph(const std::string& name, const Graph& g,
                               const SuiteOptions& opts);

}  // namespace raag
