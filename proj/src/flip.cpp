#include "cag/flip.hpp"

#include <stdexcept>

namespace cag {

FlipGraph flip(const Graph& g, int s) {
  if (!g.has_vertex(s)) throw std::invalid_argument("flip: no such vertex");
  if (!g.is_simplicial(s)) throw std::invalid_argument("flip: vertex is not simplicial");
  VertexSet inside = g.closed_neighbors(s);
  VertexSet all = g.vertices();
  Graph r(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      bool ui = inside.contains(u), vi = inside.contains(v);
      bool edge;
      if (!ui && !vi) {
        edge = g.adjacent(u, v);
      } else if (ui && vi) {
        edge = !((g.neighbors(u) | g.neighbors(v)) == all);
      } else {
        int in = ui ? u : v, out = ui ? v : u;
        edge = !g.closed_neighbors(out).subset_of(g.closed_neighbors(in));
      }
      if (edge) r.add_edge(u, v);
    }
  return {g, s, std::move(r), inside};
}

std::vector<std::pair<int, int>> collateral_edges(const FlipGraph& f) {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : f.result.edges())
    if (f.base.adjacent(u, v) && (f.inside.contains(u) || f.inside.contains(v)))
      out.emplace_back(u, v);
  return out;
}

VertexSet witnesses(const FlipGraph& f, VertexSet k) {
  if (!f.result.is_clique(k)) throw std::invalid_argument("witnesses: set is not a clique of the flipped graph");
  VertexSet covered_by_s = f.base.closed_neighbors(f.s) & k;
  VertexSet out;
  for (int w : f.base.vertices() - f.inside) {
    VertexSet covered_by_w = f.base.closed_neighbors(w) & k;
    if ((covered_by_w & covered_by_s).empty() && (covered_by_w | covered_by_s) == k) out.insert(w);
  }
  return out;
}

std::pair<Graph, std::vector<int>> strip_universal(const Graph& g) {
  Graph cur = g;
  std::vector<int> keep;
  for (int v = 0; v < g.n(); ++v) keep.push_back(v);
  for (;;) {
    int u = -1;
    for (int v = 0; v < cur.n() && u < 0; ++v)
      if (cur.is_universal(v)) u = v;
    if (u < 0) break;
    auto [next, map] = induced_subgraph(cur, cur.vertices() - VertexSet::single(u));
    std::vector<int> next_keep;
    for (int idx : map) next_keep.push_back(keep[idx]);
    cur = std::move(next);
    keep = std::move(next_keep);
  }
  return {cur, keep};
}

}  // namespace cag
