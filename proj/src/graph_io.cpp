#include "raag/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace raag {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

}  // namespace

Graph load_graph(std::istream& in, const std::string& source_name) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  std::vector<VertexSet> adj;  // duplicate-edge detection during the scan

  auto index_of = [&](const std::string& name) -> int {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    return -1;
  };

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks[0] == "vertices") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (index_of(toks[i]) >= 0)
          throw ParseError(source_name, lineno,
                           "duplicate vertex '" + toks[i] + "'");
        if (names.size() >= 64)
          throw ParseError(source_name, lineno, "more than 64 vertices");
        names.push_back(toks[i]);
        adj.emplace_back();
      }
    } else if (toks[0] == "edge") {
      if (toks.size() != 3)
        throw ParseError(source_name, lineno,
                         "'edge' takes exactly two vertex names");
      int u = index_of(toks[1]);
      int v = index_of(toks[2]);
      if (u < 0)
        throw ParseError(source_name, lineno, "unknown vertex '" + toks[1] + "'");
      if (v < 0)
        throw ParseError(source_name, lineno, "unknown vertex '" + toks[2] + "'");
      if (u == v)
        throw ParseError(source_name, lineno,
                         "loop at vertex '" + toks[1] + "' is not allowed");
      if (adj[u].contains(v))
        throw ParseError(source_name, lineno,
                         "duplicate edge {" + toks[1] + "," + toks[2] + "}");
      adj[u].insert(v);
      adj[v].insert(u);
      edges.emplace_back(u, v);
    } else {
      throw ParseError(source_name, lineno,
                       "unknown directive '" + toks[0] + "'");
    }
  }
  return Graph(std::move(names), edges);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return load_graph(in, path);
}

std::string graph_to_file_format(const Graph& g) {
  std::string out = "vertices";
  for (const auto& name : g.names()) out += " " + name;
  out += "\n";
  for (auto [u, v] : g.edges())
    out += "edge " + g.name(u) + " " + g.name(v) + "\n";
  return out;
}

}  // namespace raag
