#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "raag/graph.hpp"

namespace raag {

// Parse error with the offending source line.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& source, int line, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// Graph file format, one directive per line:
//
//   # comment
//   vertices a b c d
//   edge a b
//   edge b c
//
// `vertices` lines may repeat and append; every vertex must be declared
// before an edge uses it. Loops, duplicate vertices, duplicate edges and
// unknown endpoints are rejected with the offending line number.
Graph load_graph(std::istream& in, const std::string& source_name);
Graph load_graph_file(const std::string& path);

std::string graph_to_file_format(const Graph& g);

}  // namespace raag
