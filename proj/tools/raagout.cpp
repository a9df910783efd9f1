// raagout: structural analysis of the outer automorphism group of a
// right-angled Artin group, driven by its defining graph.
//
//   raagout analyze <graph> [-o out]
//   raagout verify (<graph> | --random "n p count") --suite S [--seed N] [--radius R]
//   raagout dot <graph> --which (graph|gamma0|poset)
//
// Exit codes: 0 success, 1 verification failure, 2 input/usage error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "raag/graph_gen.hpp"
#include "raag/graph_io.hpp"
#include "raag/report.hpp"
#include "raag/verify_suites.hpp"

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;

int cmd_analyze(const std::string& path, const std::string& out_path) {
  raag::Graph g = raag::load_graph_file(path);
  std::string report = raag::analyze_report(g);
  if (out_path.empty()) {
    std::cout << report;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kExitInputError;
    }
    out << report;
  }
  return 0;
}

int cmd_dot(const std::string& path, const std::string& which) {
  raag::Graph g = raag::load_graph_file(path);
  if (which == "graph") {
    std::cout << raag::dot_graph(g);
  } else if (which == "gamma0") {
    std::cout << raag::dot_gamma_zero(g);
  } else if (which == "poset") {
    std::cout << raag::dot_class_poset(g);
  } else {
    std::cerr << "error: unknown selector '" << which
              << "' (expected graph, gamma0 or poset)\n";
    return kExitInputError;
  }
  return 0;
}

int cmd_verify(const std::string& path, const std::string& random_spec,
               const std::string& suite, const raag::SuiteOptions& base_opts) {
  raag::SuiteOptions opts = base_opts;
  raag::SuiteResult result;
  if (!random_spec.empty()) {
    std::istringstream in(random_spec);
    int n = 0, count = 0;
    double p = 0;
    if (!(in >> n >> p >> count) || n < 1 || count < 1 || p < 0 || p > 1) {
      std::cerr << "error: --random expects \"n p count\"\n";
      return kExitInputError;
    }
    opts.max_n = n;
    opts.edge_p = p;
    opts.count = count;
    result = raag::run_suite(suite, opts);
  } else {
    raag::Graph g = raag::load_graph_file(path);
    result = raag::run_suite_on_graph(suite, g, opts);
  }
  std::cout << "suite " << result.name << ": seed=" << opts.seed
            << " radius=" << opts.radius << " checks=" << result.checks << "\n";
  for (const std::string& f : result.failures) std::cout << "FAIL: " << f << "\n";
  std::cout << "suite " << result.name << ": "
            << (result.pass ? "PASS" : "FAIL") << "\n";
  return result.pass ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structural analysis of Out(A_Gamma) for right-angled Artin groups"};
  app.require_subcommand(1);

  std::string graph_path, out_path, which = "graph", random_spec, suite;
  raag::SuiteOptions opts;

  CLI::App* analyze = app.add_subcommand("analyze", "full structural report");
  analyze->add_option("graph", graph_path, "graph file")->required();
  analyze->add_option("-o,--output", out_path, "write the report to a file");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("graph", graph_path, "graph file");
  verify->add_option("--random", random_spec,
                     "random graphs instead of a file: \"n p count\"");
  verify->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(raag::suite_names));
  verify->add_option("--seed", opts.seed, "random seed");
  verify->add_option("--radius", opts.radius, "ball radius for searches");
  verify->add_option("--pairs", opts.pairs, "random pair checks per graph");

  CLI::App* dot = app.add_subcommand("dot", "emit DOT diagrams");
  dot->add_option("graph", graph_path, "graph file")->required();
  dot->add_option("--which", which, "graph, gamma0 or poset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(graph_path, out_path);
    if (dot->parsed()) return cmd_dot(graph_path, which);
    if (verify->parsed()) {
      if (graph_path.empty() == random_spec.empty()) {
        std::cerr << "error: verify needs exactly one of <graph> or --random\n";
        return kExitInputError;
      }
      return cmd_verify(graph_path, random_spec, suite, opts);
    }
  } catch (const raag::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
