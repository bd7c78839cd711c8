#include "cag/subiso.hpp"

#include <algorithm>

namespace cag {
namespace {

struct Searcher {
  const Graph& host;
  const Graph& pattern;
  std::vector<int> order;   // pattern vertices, most-constrained first
  std::vector<int> phi;     // pattern -> host, -1 unassigned
  VertexSet used;

  Searcher(const Graph& h, const Graph& p) : host(h), pattern(p), phi(p.n(), -1) {
    // Highest degree first, then prefer vertices attached to what is placed.
    std::vector<bool> placed(p.n(), false);
    for (int step = 0; step < p.n(); ++step) {
      int best = -1, best_links = -1, best_deg = -1;
      for (int v = 0; v < p.n(); ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (int u : pattern.neighbors(v))
          if (placed[u]) ++links;
        int deg = pattern.degree(v);
        if (links > best_links || (links == best_links && deg > best_deg)) {
          best = v;
          best_links = links;
          best_deg = deg;
        }
      }
      placed[best] = true;
      order.push_back(best);
    }
  }

  bool extend(size_t depth, std::vector<VertexSet>& cand) {
    if (depth == order.size()) return true;
    int p = order[depth];
    for (int h : cand[p] - used) {
      if (host.degree(h) < pattern.degree(p)) continue;
      bool ok = true;
      for (size_t d = 0; d < depth && ok; ++d) {
        int q = order[d];
        if (pattern.adjacent(p, q) != host.adjacent(h, phi[q])) ok = false;
      }
      if (!ok) continue;
      phi[p] = h;
      used.insert(h);
      if (extend(depth + 1, cand)) return true;
      used.erase(h);
      phi[p] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_induced_copy(const Graph& host, const Graph& pattern,
                                                  const std::vector<VertexSet>& candidates) {
  if (pattern.n() > host.n()) return std::nullopt;
  if (pattern.n() == 0) return std::vector<int>{};
  Searcher s(host, pattern);
  std::vector<VertexSet> cand = candidates;
  if (s.extend(0, cand)) return s.phi;
  return std::nullopt;
}

std::optional<std::vector<int>> find_induced_copy(const Graph& host, const Graph& pattern) {
  std::vector<VertexSet> cand(pattern.n(), host.vertices());
  return find_induced_copy(host, pattern, cand);
}

}  // namespace cag
