#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cag/arcs.hpp"
#include "cag/graph.hpp"

namespace cag {
namespace {

// Backtracking over circular orders of the 2n arc endpoints on a circle of
// 2n integer points.  The first endpoint of vertex 0 is pinned to slot 0
// (rotation symmetry).  Arcs covering the cut before slot 0 are fixed in
// advance as a wrap set W, which must form a clique with vertex 0.  Models
// with all endpoints distinct suffice: a model with coincident endpoints
// expands to one without, preserving both the intersection graph and the
// Helly property, and no arc ever needs the full circle.
struct EndpointSearch {
  const Graph& g;
  int n;
  bool want_helly;
  std::vector<std::uint64_t> adj;
  std::vector<int> lpos, rpos;
  std::uint64_t wrapset = 0;
  std::uint64_t open = 0;      // arcs covering the current slot gap
  std::uint64_t complete = 0;  // arcs with both endpoints placed
  std::vector<std::uint64_t> met;
  std::optional<ArcModel> found;

  explicit EndpointSearch(const Graph& graph, bool helly)
      : g(graph), n(graph.n()), want_helly(helly), adj(n), lpos(n, -1), rpos(n, -1), met(n, 0) {
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v).bits;
  }

  bool run() {
    if (n == 0) {
      found = ArcModel{1, {}};
      return true;
    }
    if (n == 1) {
      found = ArcModel{1, {{0, 0, false}}};
      return true;
    }
    // Enumerate wrap sets: cliques inside N(0).
    std::vector<std::uint64_t> cliques;
    enumerate_cliques(adj[0], 0, cliques);
    for (std::uint64_t w : cliques) {
      wrapset = w;
      std::fill(lpos.begin(), lpos.end(), -1);
      std::fill(rpos.begin(), rpos.end(), -1);
      std::fill(met.begin(), met.end(), 0);
      complete = 0;
      // Slot 0 carries L_0; wrapped arcs cover it too.
      open = w | 1;
      lpos[0] = 0;
      for (int v : VertexSet(w | 1))
        met[v] |= (w | 1) & ~(std::uint64_t{1} << v);
      if (place(1)) return true;
    }
    return false;
  }

  void enumerate_cliques(std::uint64_t allowed, std::uint64_t chosen, std::vector<std::uint64_t>& out) {
    out.push_back(chosen);
    for (std::uint64_t m = allowed; m; m &= m - 1) {
      int v = std::countr_zero(m);
      std::uint64_t bit = std::uint64_t{1} << v;
      enumerate_cliques(allowed & adj[v] & ~((bit << 1) - 1), chosen | bit, out);
    }
  }

  bool finish() {
    ArcModel m;
    m.circle_len = 2 * n;
    m.arcs.resize(n);
    for (int v = 0; v < n; ++v) m.arcs[v] = {lpos[v], rpos[v], false};
    if (!realizes(m, g)) return false;  // safety net; pruning should prevent this
    if (want_helly && !is_helly(m).helly) return false;
    found = m;
    return true;
  }

  bool place(int slot) {
    if (slot == 2 * n) return finish();
    for (int v = 0; v < n; ++v) {
      std::uint64_t bit = std::uint64_t{1} << v;
      bool wrapped = wrapset & bit;
      // The available symbol for v at this slot, if any.
      if (!wrapped && lpos[v] < 0 && v != 0) {
        // open a normal arc: shares this point with everything open
        if ((open & ~adj[v]) == 0) {
          lpos[v] = slot;
          std::uint64_t prev_open = open;
          met[v] |= open;
          for (int u : VertexSet(open)) met[u] |= bit;
          open |= bit;
          if (place(slot + 1)) return true;
          open = prev_open;
          lpos[v] = -1;
          // met bits are monotone per branch; recompute cheaply by clearing
          for (int u : VertexSet(prev_open)) met[u] &= ~bit;
          met[v] = 0;
        }
      }
      if (!wrapped && lpos[v] >= 0 && rpos[v] < 0) {
        // close a normal arc; all its required neighbors among complete arcs
        // must have been met
        rpos[v] = slot;
        open &= ~bit;
        complete |= bit;
        bool ok = (adj[v] & complete & ~met[v]) == 0;
        if (ok && place(slot + 1)) return true;
        complete &= ~bit;
        open |= bit;
        rpos[v] = -1;
      }
      if (wrapped && rpos[v] < 0) {
        // close the [0..rp] stretch of a wrapped arc
        rpos[v] = slot;
        open &= ~bit;
        if (place(slot + 1)) return true;
        open |= bit;
        rpos[v] = -1;
      }
      if (wrapped && rpos[v] >= 0 && lpos[v] < 0) {
        // reopen a wrapped arc; it stays open to the end
        if ((open & ~adj[v]) == 0) {
          std::uint64_t prev_met_v = met[v];
          std::uint64_t gained = 0;
          lpos[v] = slot;
          met[v] |= open;
          for (int u : VertexSet(open))
            if (!(met[u] & bit)) {
              met[u] |= bit;
              gained |= std::uint64_t{1} << u;
            }
          open |= bit;
          complete |= bit;
          bool ok = (adj[v] & complete & ~met[v]) == 0;
          if (ok && place(slot + 1)) return true;
          complete &= ~bit;
          open &= ~bit;
          for (int u : VertexSet(gained)) met[u] &= ~bit;
          met[v] = prev_met_v;
          lpos[v] = -1;
        }
      }
    }
    return false;
  }
};

}  // namespace

std::optional<ArcModel> ca_oracle(const Graph& g) {
  if (g.n() > 8) throw std::invalid_argument("ca_oracle: capped at 8 vertices");
  EndpointSearch s(g, false);
  s.run();
  return s.found;
}

std::optional<ArcModel> hca_oracle(const Graph& g) {
  if (g.n() > 6) throw std::invalid_argument("hca_oracle: capped at 6 vertices");
  EndpointSearch s(g, true);
  s.run();
  return s.found;
}

namespace {

// Endpoint-order backtracking on a line.
struct LineSearch {
  const Graph& g;
  int n;
  std::vector<std::uint64_t> adj;
  std::vector<std::uint64_t> met;
  std::uint64_t open = 0, complete = 0, started = 0;

  explicit LineSearch(const Graph& graph) : g(graph), n(graph.n()), adj(n), met(n, 0) {
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v).bits;
  }

  bool place(int placed) {
    if (placed == 2 * n) return true;
    for (int v = 0; v < n; ++v) {
      std::uint64_t bit = std::uint64_t{1} << v;
      if (!(started & bit)) {
        if ((open & ~adj[v]) == 0) {
          started |= bit;
          std::uint64_t prev_open = open;
          met[v] |= open;
          for (int u : VertexSet(open)) met[u] |= bit;
          open |= bit;
          if (place(placed + 1)) return true;
          open = prev_open;
          started &= ~bit;
          for (int u : VertexSet(prev_open)) met[u] &= ~bit;
          met[v] = 0;
        }
      } else if (!(complete & bit)) {
        open &= ~bit;
        complete |= bit;
        bool ok = (adj[v] & complete & ~met[v]) == 0;
        if (ok && place(placed + 1)) return true;
        complete &= ~bit;
        open |= bit;
      }
    }
    return false;
  }
};

}  // namespace

bool interval_oracle(const Graph& g) {
  if (g.n() > 8) throw std::invalid_argument("interval_oracle: capped at 8 vertices");
  if (g.n() <= 1) return true;
  LineSearch s(g);
  return s.place(0);
}

}  // namespace cag
