#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

using Rng = std::mt19937_64;

// Bounded draws implemented directly so results are identical across
// standard libraries.
std::uint64_t rand_below(Rng& rng, std::uint64_t n);
double rand_unit(Rng& rng);

std::vector<std::string> default_names(int n);  // "a", "b", ...

Graph graph_from_mask(int n, std::uint64_t edge_mask);

// Erdős–Rényi G(n, p), resampled until connected.
Graph random_connected_graph(Rng& rng, int n, double p);

// Uniform labelled tree via a random Prüfer sequence.
Graph random_tree(Rng& rng, int n);

// All connected graphs on exactly n vertices, one per isomorphism class
// (canonical form by minimizing the edge code over all permutations).
// Practical for n <= 6.
std::vector<Graph> connected_graphs_up_to_iso(int n);

// Connected graph masks on n labelled vertices, ascending. Practical for
// n <= 7 (about 1.9M masks at n = 7).
std::vector<std::uint64_t> connected_masks(int n);

}  // namespace raag
