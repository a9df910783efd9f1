#include "raag/graph_gen.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace raag {

std::uint64_t rand_below(Rng& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("rand_below(0)");
  // rejection sampling keeps the draw unbiased
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

double rand_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    std::string name;
    int x = i;
    do {
      name.insert(name.begin(), static_cast<char>('a' + x % 26));
      x = x / 26 - 1;
    } while (x >= 0);
    names.push_back(name);
  }
  return names;
}

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

// bit position of pair (i, j), i < j, in the edge mask
int pair_bit(int n, int i, int j) {
  int bit = 0;
  for (int a = 0; a < i; ++a) bit += n - 1 - a;
  return bit + (j - i - 1);
}

bool mask_connected(int n, std::uint64_t mask) {
  if (n <= 1) return true;
  std::vector<std::uint64_t> adj(n, 0);
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((mask >> bit) & 1) {
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
      }
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (int v = 0; v < n; ++v)
      if ((frontier >> v) & 1) next |= adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

std::uint64_t permuted_mask(int n, std::uint64_t mask,
                            const std::vector<int>& perm) {
  std::uint64_t out = 0;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((mask >> bit) & 1) {
        int a = perm[i], b = perm[j];
        out |= std::uint64_t{1} << pair_bit(n, std::min(a, b), std::max(a, b));
      }
  return out;
}

}  // namespace

Graph graph_from_mask(int n, std::uint64_t edge_mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((edge_mask >> bit) & 1) edges.emplace_back(i, j);
  return Graph(default_names(n), edges);
}

Graph random_connected_graph(Rng& rng, int n, double p) {
  if (n < 1) throw std::invalid_argument("random_connected_graph: n < 1");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::uint64_t mask = 0;
    for (int bit = 0; bit < pair_count(n); ++bit)
      if (rand_unit(rng) < p) mask |= std::uint64_t{1} << bit;
    if (mask_connected(n, mask)) return graph_from_mask(n, mask);
  }
  // p too small for the sampler to hit a connected graph; fall back to a tree
  return random_tree(rng, n);
}

Graph random_tree(Rng& rng, int n) {
  if (n < 1) throw std::invalid_argument("random_tree: n < 1");
  if (n == 1) return Graph(default_names(1), std::vector<std::pair<int, int>>{});
  if (n == 2)
    return Graph(default_names(2), std::vector<std::pair<int, int>>{{0, 1}});
  std::vector<int> pruefer(n - 2);
  for (int& x : pruefer) x = static_cast<int>(rand_below(rng, n));
  std::vector<int> degree(n, 1);
  for (int x : pruefer) ++degree[x];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<std::pair<int, int>> edges;
  for (int x : pruefer) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
    if (--degree[x] == 1) leaves.insert(x);
  }
  int u = *leaves.begin();
  int v = *std::next(leaves.begin());
  edges.emplace_back(std::min(u, v), std::max(u, v));
  return Graph(default_names(n), edges);
}

std::vector<Graph> connected_graphs_up_to_iso(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("connected_graphs_up_to_iso: supported for 1..8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Graph> out;
  std::set<std::uint64_t> seen;
  std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (!mask_connected(n, mask)) continue;
    std::uint64_t canon = mask;
    for (const auto& p : perms)
      canon = std::min(canon, permuted_mask(n, mask, p));
    if (seen.insert(canon).second) out.push_back(graph_from_mask(n, canon));
  }
  return out;
}

std::vector<std::uint64_t> connected_masks(int n) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("connected_masks: supported for 1..7");
  std::vector<std::uint64_t> out;
  std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (mask_connected(n, mask)) out.push_back(mask);
  return out;
}

}  // namespace raag
