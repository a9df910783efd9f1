#include "raag/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace raag {

int VertexSet::size() const { return std::popcount(bits_); }

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  std::uint64_t b = bits_;
  while (b) {
    int v = std::countr_zero(b);
    out.push_back(v);
    b &= b - 1;
  }
  return out;
}

int VertexSet::least() const {
  return bits_ == 0 ? -1 : std::countr_zero(bits_);
}

namespace {

void validate_names(const std::vector<std::string>& names) {
  if (names.size() > 64)
    throw std::invalid_argument("graph has more than 64 vertices");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw std::invalid_argument("duplicate vertex '" + names[i] + "'");
}

}  // namespace

Graph::Graph(std::vector<std::string> names,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(names)) {
  validate_names(names_);
  std::vector<std::pair<int, int>> idx_edges;
  idx_edges.reserve(edges.size());
  for (const auto& [a, b] : edges) idx_edges.emplace_back(index_of(a), index_of(b));
  adj_.assign(names_.size(), VertexSet{});
  add_edges(idx_edges);
}

Graph::Graph(std::vector<std::string> names,
             const std::vector<std::pair<int, int>>& edges)
    : names_(std::move(names)) {
  validate_names(names_);
  adj_.assign(names_.size(), VertexSet{});
  add_edges(edges);
}

void Graph::add_edges(const std::vector<std::pair<int, int>>& edges) {
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
      throw std::invalid_argument("loop at vertex '" + names_[u] + "'");
    if (adj_[u].contains(v))
      throw std::invalid_argument("duplicate edge {" + names_[u] + "," +
                                  names_[v] + "}");
    adj_[u].insert(v);
    adj_[v].insert(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
}

int Graph::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  throw std::invalid_argument("unknown vertex '" + name + "'");
}

std::optional<int> Graph::find(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

void Graph::check_vertex(int v) const {
  if (!has_vertex(v))
    throw std::invalid_argument("vertex index " + std::to_string(v) +
                                " out of range");
}

void Graph::check_subset(VertexSet s) const {
  if (!s.subset_of(all()))
    throw std::invalid_argument("vertex set contains indices outside the graph");
}

VertexSet link(const Graph& g, int v) {
  g.check_vertex(v);
  return g.neighbors(v);
}

VertexSet star(const Graph& g, int v) {
  g.check_vertex(v);
  VertexSet s = g.neighbors(v);
  s.insert(v);
  return s;
}

std::optional<int> distance(const Graph& g, int u, int v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) return 0;
  std::vector<int> dist(g.size(), -1);
  dist[u] = 0;
  std::deque<int> queue{u};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : g.neighbors(x).to_vector()) {
      if (dist[y] >= 0) continue;
      dist[y] = dist[x] + 1;
      if (y == v) return dist[y];
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
  g.check_subset(within);
  std::vector<VertexSet> out;
  VertexSet unvisited = within;
  while (!unvisited.empty()) {
    int start = unvisited.least();
    VertexSet comp;
    std::deque<int> queue{start};
    comp.insert(start);
    unvisited.erase(start);
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      VertexSet next = g.neighbors(x).intersect(unvisited);
      for (int y : next.to_vector()) {
        comp.insert(y);
        unvisited.erase(y);
        queue.push_back(y);
      }
    }
    out.push_back(comp);
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  return components_within(g, g.all());
}

std::vector<VertexSet> components_minus_star(const Graph& g, int v) {
  g.check_vertex(v);
  return components_within(g, g.all().minus(star(g, v)));
}

bool is_connected(const Graph& g) {
  if (g.size() == 0) return true;
  return components(g).size() == 1;
}

VertexSet perp(const Graph& g, VertexSet th) {
  g.check_subset(th);
  VertexSet out;
  for (int u = 0; u < g.size(); ++u) {
    // u commutes with w when u = w or {u,w} is an edge
    if (th.minus(star(g, u)).empty()) out.insert(u);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  g.check_subset(s);
  std::vector<int> verts = s.to_vector();
  std::vector<int> new_index(g.size(), -1);
  std::vector<std::string> names;
  names.reserve(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    new_index[verts[i]] = static_cast<int>(i);
    names.push_back(g.name(verts[i]));
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (s.contains(u) && s.contains(v))
      edges.emplace_back(new_index[u], new_index[v]);
  return Graph(std::move(names), edges);
}

FreeProductFactors free_product_factors(const Graph& g) {
  FreeProductFactors out;
  for (const VertexSet& comp : components(g)) {
    if (comp.size() == 1) {
      ++out.isolated_count;
    } else {
      out.factor_sets.push_back(comp);
      out.factors.push_back(induced_subgraph(g, comp));
    }
  }
  return out;
}

namespace {

void clique_search(const Graph& g, VertexSet candidates, int current, int& best) {
  if (current + candidates.size() <= best) return;
  if (candidates.empty()) {
    best = std::max(best, current);
    return;
  }
  int v = candidates.least();
  // branch: take v, or leave it out
  clique_search(g, candidates.minus(VertexSet::single(v)).intersect(g.neighbors(v)),
                current + 1, best);
  clique_search(g, candidates.minus(VertexSet::single(v)), current, best);
}

}  // namespace

int dimension(const Graph& g) {
  int best = 0;
  clique_search(g, g.all(), 0, best);
  return best;
}

std::string graph_hash(const Graph& g) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  for (const auto& name : g.names()) {
    mix("v:" + name);
    mix("\n");
  }
  for (auto [u, v] : g.edges()) {
    mix("e:" + g.name(u) + "," + g.name(v));
    mix("\n");
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string set_to_string(const Graph& g, VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.to_vector()) {
    if (!first) out += ",";
    out += g.name(v);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace raag
