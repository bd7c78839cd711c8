#include "cag/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace cag {

Graph::Graph(int n) : n_(n), adj_(n, 0) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("graph order out of range");
}

void Graph::add_edge(int u, int v) {
  if (!has_vertex(u) || !has_vertex(v)) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : VertexSet(adj_[u] & ~((std::uint64_t{2} << u) - 1))) out.emplace_back(u, v);
  return out;
}

bool Graph::is_clique(VertexSet s) const {
  for (int v : s)
    if (!(s - VertexSet::single(v)).subset_of(neighbors(v))) return false;
  return true;
}

bool Graph::is_independent(VertexSet s) const {
  for (int v : s)
    if (neighbors(v).intersects(s)) return false;
  return true;
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  VertexSet seen = VertexSet::single(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next = next | neighbors(v);
    frontier = next - seen;
    seen = seen | next;
  }
  return seen == vertices();
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw std::invalid_argument("vertex set not within graph");
  std::vector<int> map = s.to_vector();
  Graph h(static_cast<int>(map.size()));
  for (int i = 0; i < h.n(); ++i)
    for (int j = i + 1; j < h.n(); ++j)
      if (g.adjacent(map[i], map[j])) h.add_edge(i, j);
  return {std::move(h), std::move(map)};
}

Graph complement(const Graph& g) {
  Graph h(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

Graph add_isolated_vertex(const Graph& g) {
  Graph h(g.n() + 1);
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph h(a.n() + b.n());
  for (auto [u, v] : a.edges()) h.add_edge(u, v);
  for (auto [u, v] : b.edges()) h.add_edge(a.n() + u, a.n() + v);
  return h;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n()) throw std::invalid_argument("relabel: bad permutation");
  Graph h(g.n());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

Graph remove_vertex(const Graph& g, int v) {
  return induced_subgraph(g, g.vertices() - VertexSet::single(v)).first;
}

std::optional<std::vector<int>> is_isomorphic(const Graph& g, const Graph& h) {
  if (g.n() != h.n() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (canonical_form(g) != canonical_form(h)) return std::nullopt;
  std::vector<int> pg = canonical_labeling(g);
  std::vector<int> ph = canonical_labeling(h);
  // phi = ph^-1 . pg
  std::vector<int> inv(h.n());
  for (int v = 0; v < h.n(); ++v) inv[ph[v]] = v;
  std::vector<int> phi(g.n());
  for (int v = 0; v < g.n(); ++v) phi[v] = inv[pg[v]];
  return phi;
}

}  // namespace cag
