#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace raag {

// Set of vertices of one graph, stored as a bitmask over vertex indices.
// Iteration and printing order is always ascending index, which equals the
// input vertex-list order of the ambient graph.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }
  static VertexSet full(int n) {
    return n == 64 ? VertexSet(~std::uint64_t{0})
                   : VertexSet((std::uint64_t{1} << n) - 1);
  }

  bool contains(int v) const { return (bits_ >> v) & 1u; }
  void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  bool empty() const { return bits_ == 0; }
  int size() const;
  std::uint64_t bits() const { return bits_; }

  VertexSet unite(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  VertexSet intersect(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  bool operator==(const VertexSet&) const = default;

  std::vector<int> to_vector() const;  // ascending vertex index
  int least() const;                   // -1 if empty

private:
  std::uint64_t bits_ = 0;
};

// Finite simplicial graph: named vertices, symmetric irreflexive adjacency.
// At most 64 vertices (sets are bitmasks); all analyses here target small,
// desk-scale graphs.
class Graph {
public:
  Graph() = default;
  Graph(std::vector<std::string> names,
        const std::vector<std::pair<std::string, std::string>>& edges);
  Graph(std::vector<std::string> names,
        const std::vector<std::pair<int, int>>& edges);

  int size() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int v) const { return names_[v]; }
  int index_of(const std::string& name) const;  // throws on unknown name
  std::optional<int> find(const std::string& name) const;

  bool has_vertex(int v) const { return v >= 0 && v < size(); }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  VertexSet all() const { return VertexSet::full(size()); }

  void check_vertex(int v) const;                  // throws on out of range
  void check_subset(VertexSet s) const;            // throws if s ⊄ V

private:
  void add_edges(const std::vector<std::pair<int, int>>& edges);

  std::vector<std::string> names_;
  std::vector<VertexSet> adj_;
  std::vector<std::pair<int, int>> edges_;  // i < j, sorted
};

// -- graph-theoretic primitives -------------------------------------------

// Vertices at distance exactly one from v.
VertexSet link(const Graph& g, int v);
// link(v) plus v itself.
VertexSet star(const Graph& g, int v);

// Edge-path distance; nullopt means the vertices lie in different components.
std::optional<int> distance(const Graph& g, int u, int v);

bool is_connected(const Graph& g);

// Connected components, ordered by least member vertex.
std::vector<VertexSet> components(const Graph& g);

// Components of the induced subgraph on `within`, ordered by least member.
std::vector<VertexSet> components_within(const Graph& g, VertexSet within);

// Components of the induced subgraph on V \ st(v); may be empty.
std::vector<VertexSet> components_minus_star(const Graph& g, int v);

// Vertices commuting with every generator of th: u with th ⊆ st(u).
// Members of th belong to the result when they commute with all of th.
VertexSet perp(const Graph& g, VertexSet th);

// Induced subgraph on s, vertex names and order inherited from g.
Graph induced_subgraph(const Graph& g, VertexSet s);

struct FreeProductFactors {
  int isolated_count = 0;            // number of single-vertex components
  std::vector<Graph> factors;        // induced subgraphs on multi-vertex components
  std::vector<VertexSet> factor_sets;
};
FreeProductFactors free_product_factors(const Graph& g);

// Size of a maximum clique (exhaustive search with pruning).
int dimension(const Graph& g);

// Stable content hash of the graph (vertex names + edge list).
std::string graph_hash(const Graph& g);

// "{a,b,c}" with members in vertex order; "{}" when empty.
std::string set_to_string(const Graph& g, VertexSet s);

}  // namespace raag
