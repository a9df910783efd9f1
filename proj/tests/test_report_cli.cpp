#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "raag/graph_io.hpp"
#include "raag/report.hpp"

using namespace raag;

namespace {

const std::string kSource = RAAG_SOURCE_DIR;
const std::string kBin = RAAGOUT_BIN;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Graph sample(const std::string& name) {
  return load_graph_file(kSource + "/graphs/" + name + ".graph");
}

struct RunResult {
  int status;
  std::string output;  // stdout + stderr
};

std::string temp_path(const std::string& suffix) {
  std::string tmpl = "/tmp/raag_test_XXXXXX";
  int fd = mkstemp(tmpl.data());
  REQUIRE(fd >= 0);
  close(fd);
  std::remove(tmpl.c_str());
  return tmpl + suffix;
}

RunResult run_cli(const std::string& args) {
  std::string out_file = temp_path(".out");
  std::string cmd = kBin + " " + args + " > " + out_file + " 2>&1";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.status = WEXITSTATUS(rc);
  std::ifstream in(out_file);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  std::remove(out_file.c_str());
  return r;
}

}  // namespace

TEST_CASE("analysis reports match the golden files") {
  for (const std::string name : {"p3", "p4", "k3", "k4", "star13"}) {
    CHECK(analyze_report(sample(name)) ==
          slurp(kSource + "/tests/golden/" + name + "_report.txt"));
  }
}

TEST_CASE("report generation is byte-stable") {
  Graph p4 = sample("p4");
  std::string first = analyze_report(p4);
  Graph again = sample("p4");
  CHECK(analyze_report(again) == first);
}

TEST_CASE("kernel report golden") {
  Graph p4 = sample("p4");
  GeneratorWord pib{
      GeneratorSpec::partial_conjugation_of(1, VertexSet::single(3))};
  GeneratorWord tab{GeneratorSpec::transvection_of(0, 1)};
  GeneratorWord invb{GeneratorSpec::inversion_of(1)};
  std::string all = kernel_report(p4, pib) + "\n" + kernel_report(p4, tab) +
                    "\n" + kernel_report(p4, invb);
  CHECK(all == slurp(kSource + "/tests/golden/p4_kernel.txt"));
}

TEST_CASE("singleton decomposition goldens") {
  for (const std::string name : {"p3", "k2", "k3", "k4", "star13"}) {
    CHECK(singleton_report(sample(name)) ==
          slurp(kSource + "/tests/golden/" + name + "_singleton.txt"));
  }
}

TEST_CASE("dot emission goldens") {
  CHECK(dot_gamma_zero(sample("p4")) ==
        slurp(kSource + "/tests/golden/p4_gamma0.dot"));
  CHECK(dot_class_poset(sample("p3")) ==
        slurp(kSource + "/tests/golden/p3_poset.dot"));
  CHECK(dot_graph(sample("p4")) ==
        slurp(kSource + "/tests/golden/p4_graph.dot"));
  // one node for a complete graph's gamma0
  std::string kdot = dot_gamma_zero(sample("k4"));
  CHECK(kdot.find("\"{a,b,c,d}\"") != std::string::npos);
  CHECK(kdot.find("--") == std::string::npos);
}

TEST_CASE("cli analyze") {
  RunResult ok = run_cli("analyze " + kSource + "/graphs/p4.graph");
  CHECK(ok.status == 0);
  CHECK(ok.output == slurp(kSource + "/tests/golden/p4_report.txt"));

  RunResult missing = run_cli("analyze /nonexistent.graph");
  CHECK(missing.status == 2);

  // parse errors carry the line number and exit with the input-error code
  std::string bad = temp_path(".graph");
  {
    std::ofstream out(bad);
    out << "vertices a b\nedge a a\n";
  }
  RunResult loop = run_cli("analyze " + bad);
  CHECK(loop.status == 2);
  CHECK(loop.output.find(":2: loop at vertex 'a'") != std::string::npos);
  std::remove(bad.c_str());
}

TEST_CASE("cli dot") {
  RunResult g0 = run_cli("dot " + kSource + "/graphs/p4.graph --which gamma0");
  CHECK(g0.status == 0);
  CHECK(g0.output == slurp(kSource + "/tests/golden/p4_gamma0.dot"));

  RunResult bad = run_cli("dot " + kSource + "/graphs/p4.graph --which nope");
  CHECK(bad.status == 2);
  CHECK(bad.output.find("unknown selector") != std::string::npos);

  // gamma0/poset need a connected graph
  RunResult disc =
      run_cli("dot " + kSource + "/graphs/disconnected.graph --which gamma0");
  CHECK(disc.status == 2);
  CHECK(disc.output.find("connected") != std::string::npos);
}

TEST_CASE("cli verify") {
  RunResult ok = run_cli("verify " + kSource +
                         "/graphs/p4.graph --suite order-lemmas --seed 7");
  CHECK(ok.status == 0);
  CHECK(ok.output.find("suite order-lemmas: PASS") != std::string::npos);

  RunResult rnd = run_cli(
      "verify --random \"6 0.4 20\" --suite order-lemmas --seed 3");
  CHECK(rnd.status == 0);
  CHECK(rnd.output.find("PASS") != std::string::npos);

  // determinism under a fixed seed
  RunResult rnd2 = run_cli(
      "verify --random \"6 0.4 20\" --suite order-lemmas --seed 3");
  CHECK(rnd2.output == rnd.output);

  RunResult unknown = run_cli("verify " + kSource +
                              "/graphs/p4.graph --suite no-such-suite");
  CHECK(unknown.status == 2);

  RunResult both = run_cli("verify " + kSource +
                           "/graphs/p4.graph --random \"5 0.3 5\" --suite "
                           "order-lemmas");
  CHECK(both.status == 2);

  RunResult kf = run_cli("verify " + kSource +
                         "/graphs/p4.graph --suite kernel-f --seed 5 --pairs 10");
  CHECK(kf.status == 0);

  RunResult gd = run_cli("verify " + kSource +
                         "/graphs/p3.graph --suite godelle-oracle --radius 4");
  CHECK(gd.status == 0);
  RunResult lc = run_cli("verify " + kSource +
                         "/graphs/p4.graph --suite leaf-commute");
  CHECK(lc.status == 0);
  RunResult gw = run_cli("verify " + kSource +
                         "/graphs/p4.graph --suite generator-wellformed");
  CHECK(gw.status == 0);
}

TEST_CASE("disconnected graphs factor through analyze") {
  Graph mixed = load_graph_file(kSource + "/graphs/disconnected.graph");
  std::string rep = analyze_report(mixed);
  CHECK(rep.find("isolated vertices=1") != std::string::npos);
  CHECK(rep.find("factor 1: {a,b}") != std::string::npos);

  Graph d3 = load_graph_file(kSource + "/graphs/discrete3.graph");
  std::string rep3 = analyze_report(d3);
  CHECK(rep3.find("isolated vertices=3") != std::string::npos);
  CHECK(rep3.find("factors=0") != std::string::npos);
}
