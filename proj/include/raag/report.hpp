#pragma once

#include <string>

#include "raag/graph.hpp"
#include "raag/projection.hpp"

namespace raag {

// Full structural report: factorization, then per connected factor the
// classes, order, gamma0, joins with their N/C/Z data, generator inventory,
// leaf transvections, kernel data for the enumerated partial conjugations,
// and the singleton decomposition when gamma0 is a single vertex.
// Deterministic: same graph, same bytes.
std::string analyze_report(const Graph& g);

// Kernel report for one generator word on a connected graph: per maximal
// class the restriction images, reconciled conjugator and f-vector, then
// the projection-kernel decomposition.
std::string kernel_report(const Graph& g, const GeneratorWord& word,
                          int radius = 6);

// DOT renderings (deterministic node order). gamma0/poset require a
// connected graph.
std::string dot_graph(const Graph& g);
std::string dot_gamma_zero(const Graph& g);
std::string dot_class_poset(const Graph& g);

std::string singleton_report(const Graph& g);

}  // namespace raag
