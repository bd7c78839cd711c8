#include "cag/chordal.hpp"

#include <algorithm>
#include <array>

#include "cag/families.hpp"
#include "cag/subiso.hpp"

namespace cag {
namespace {

// Maximum cardinality search; the visit order reversed is a PEO iff chordal.
std::vector<int> mcs_order(const Graph& g) {
  int n = g.n();
  std::vector<int> weight(n, 0), visit;
  VertexSet left = g.vertices();
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v : left)
      if (pick < 0 || weight[v] > weight[pick]) pick = v;
    visit.push_back(pick);
    left.erase(pick);
    for (int u : g.neighbors(pick) & left) ++weight[u];
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

bool is_peo(const Graph& g, const std::vector<int>& order) {
  VertexSet rest = g.vertices();
  for (int v : order) {
    if (!g.is_clique(g.closed_neighbors(v) & rest)) return false;
    rest.erase(v);
  }
  return true;
}

// Induced cycle through v and two nonadjacent neighbors a, b: shortest a-b
// path in G minus (N[v] \ {a,b}).
std::optional<std::vector<int>> hole_through(const Graph& g, int v, int a, int b) {
  VertexSet allowed = (g.vertices() - g.closed_neighbors(v)) | VertexSet::of({a, b});
  std::vector<int> parent(g.n(), -1);
  parent[a] = a;
  std::vector<int> queue{a};
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int y : g.neighbors(x) & allowed) {
      if (parent[y] >= 0) continue;
      parent[y] = x;
      if (y == b) {
        std::vector<int> path;
        for (int cur = b; cur != a; cur = parent[cur]) path.push_back(cur);
        path.push_back(a);
        path.push_back(v);
        std::reverse(path.begin(), path.end());
        return path;  // v, a, ..., b in cycle order
      }
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = -1, best = -1;
  for (int v : p | x) {
    int c = (g.neighbors(v) & p).size();
    if (c > best) {
      best = c;
      pivot = v;
    }
  }
  for (int v : p - g.neighbors(pivot)) {
    bron_kerbosch(g, r | VertexSet::single(v), p & g.neighbors(v), x & g.neighbors(v), out);
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace

PeoResult perfect_elimination_order(const Graph& g) {
  std::vector<int> order = mcs_order(g);
  if (is_peo(g, order)) return {.order = order, .hole = std::nullopt};
  return {.order = std::nullopt, .hole = find_hole(g)};
}

bool is_chordal(const Graph& g) { return is_peo(g, mcs_order(g)); }

VertexSet simplicial_vertices(const Graph& g) {
  VertexSet s;
  for (int v = 0; v < g.n(); ++v)
    if (g.is_simplicial(v)) s.insert(v);
  return s;
}

std::optional<std::vector<int>> find_hole(const Graph& g) {
  if (is_chordal(g)) return std::nullopt;
  for (int v = 0; v < g.n(); ++v) {
    auto nbrs = g.neighbors(v).to_vector();
    for (size_t i = 0; i < nbrs.size(); ++i)
      for (size_t j = i + 1; j < nbrs.size(); ++j) {
        if (g.adjacent(nbrs[i], nbrs[j])) continue;
        if (auto hole = hole_through(g, v, nbrs[i], nbrs[j])) return hole;
      }
  }
  return std::nullopt;  // unreachable for non-chordal inputs
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> cliques;
  if (g.n() == 0) return cliques;
  auto peo = perfect_elimination_order(g);
  if (peo.order) {
    VertexSet rest = g.vertices();
    for (int v : *peo.order) {
      cliques.push_back(g.closed_neighbors(v) & rest);
      rest.erase(v);
    }
    // Keep the inclusion-maximal ones, once each.
    std::vector<VertexSet> out;
    for (size_t i = 0; i < cliques.size(); ++i) {
      bool keep = true;
      for (size_t j = 0; j < cliques.size() && keep; ++j)
        if (i != j && cliques[i].subset_of(cliques[j]) &&
            (cliques[i].bits != cliques[j].bits || j < i))
          keep = false;
      if (keep) out.push_back(cliques[i]);
    }
    cliques = out;
  } else {
    bron_kerbosch(g, VertexSet(), g.vertices(), VertexSet(), cliques);
  }
  std::sort(cliques.begin(), cliques.end(),
            [](VertexSet a, VertexSet b) { return a.bits < b.bits; });
  return cliques;
}

bool has_asteroidal_triple(const Graph& g) {
  int n = g.n();
  if (n < 6) return false;
  // comp[v][u]: component of u in G - N[v] (-1 when u is in N[v]).
  std::vector<std::array<int, kMaxVertices>> comp(n);
  for (int v = 0; v < n; ++v) {
    comp[v].fill(-1);
    VertexSet allowed = g.vertices() - g.closed_neighbors(v);
    int label = 0;
    for (int start : allowed) {
      if (comp[v][start] >= 0) continue;
      std::vector<int> stack{start};
      comp[v][start] = label;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : g.neighbors(x) & allowed)
          if (comp[v][y] < 0) {
            comp[v][y] = label;
            stack.push_back(y);
          }
      }
      ++label;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      for (int c = b + 1; c < n; ++c) {
        if (g.adjacent(a, c) || g.adjacent(b, c)) continue;
        if (comp[c][a] == comp[c][b] && comp[b][a] == comp[b][c] && comp[a][b] == comp[a][c])
          return true;
      }
    }
  return false;
}

IntervalVerdict is_interval(const Graph& g) {
  IntervalVerdict v;
  if (auto hole = find_hole(g)) {
    v.hole = hole;
    return v;
  }
  if (!has_asteroidal_triple(g)) {
    v.interval = true;
    return v;
  }
  // Chordal non-interval: hunt the minimal non-interval subgraph, small first.
  struct Entry {
    std::string name;
    Graph graph;
  };
  std::vector<Entry> patterns;
  for (int k = 6; k <= g.n(); ++k) {
    patterns.push_back({"dag-" + std::to_string(k), dag_graph(k)});
    patterns.push_back({"ddag-" + std::to_string(k), ddag_graph(k)});
    if (k == 7) {
      patterns.push_back({"long-claw", long_claw()});
      patterns.push_back({"whipping-top", whipping_top()});
    }
  }
  std::stable_sort(patterns.begin(), patterns.end(),
                   [](const Entry& a, const Entry& b) { return a.graph.n() < b.graph.n(); });
  for (const auto& e : patterns)
    if (auto phi = find_induced_copy(g, e.graph)) {
      v.family = e.name;
      v.phi = *phi;
      return v;
    }
  return v;  // unreachable: a chordal AT-positive graph holds one of the shapes
}

}  // namespace cag
