#pragma once

// Naive reference implementations used to cross-check the library.  These
// stay deliberately simple and independent of the code paths they verify.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "cag/graph.hpp"

namespace cag::testing {

// Every induced cycle of length >= 4, by subset scan.
inline bool naive_has_hole(const Graph& g) {
  int n = g.n();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet s(mask);
    if (s.size() < 4) continue;
    auto [h, map] = induced_subgraph(g, s);
    bool cycle = h.connected();
    for (int v = 0; v < h.n() && cycle; ++v)
      if (h.degree(v) != 2) cycle = false;
    if (cycle) return true;
  }
  return false;
}

// Plain recursive injective embedder (induced), in index order, optionally
// with a per-vertex admissible set and required extra edges in a base graph.
struct NaiveEmbedder {
  const Graph& host;
  const Graph& pattern;
  const std::vector<VertexSet>* allowed = nullptr;
  const Graph* base = nullptr;
  const std::vector<std::pair<int, int>>* required = nullptr;

  std::optional<std::vector<int>> run() const {
    std::vector<int> phi(pattern.n(), -1);
    std::vector<bool> used(host.n(), false);
    if (place(0, phi, used)) return phi;
    return std::nullopt;
  }

  bool place(int pv, std::vector<int>& phi, std::vector<bool>& used) const {
    if (pv == pattern.n()) {
      if (required && base)
        for (auto [u, v] : *required)
          if (!base->adjacent(phi[u], phi[v])) return false;
      return true;
    }
    for (int h = 0; h < host.n(); ++h) {
      if (used[h]) continue;
      if (allowed && !(*allowed)[pv].contains(h)) continue;
      bool ok = true;
      for (int q = 0; q < pv && ok; ++q)
        if (pattern.adjacent(pv, q) != host.adjacent(h, phi[q])) ok = false;
      if (!ok) continue;
      phi[pv] = h;
      used[h] = true;
      if (place(pv + 1, phi, used)) return true;
      used[h] = false;
      phi[pv] = -1;
    }
    return false;
  }
};

inline std::optional<std::vector<int>> naive_induced_copy(const Graph& host, const Graph& pattern) {
  return NaiveEmbedder{host, pattern}.run();
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// The drawing of the 3-sun used throughout: outer 0,2,4 and inner 1,3,5
// (the text's 1..6 shifted down by one).
inline Graph fig1a_graph() {
  return make_graph(6, {{0, 1}, {0, 5}, {1, 5}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

}  // namespace cag::testing
