#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cag/graph.hpp"

namespace cag {
namespace {

// Colour refinement + individualization.  Cells whose vertices are provably
// interchangeable (equal rows outside the cell, clique or independent inside)
// are individualized once instead of branched, which keeps large cliques in
// the generated families from exploding the search.
struct Canonizer {
  const Graph& g;
  int n;
  std::string best;
  std::vector<int> best_perm;

  explicit Canonizer(const Graph& graph) : g(graph), n(graph.n()) {}

  static std::uint64_t cell_mask(const std::vector<int>& cell) {
    std::uint64_t m = 0;
    for (int v : cell) m |= std::uint64_t{1} << v;
    return m;
  }

  void refine(std::vector<std::vector<int>>& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::uint64_t> masks(cells.size());
      for (size_t i = 0; i < cells.size(); ++i) masks[i] = cell_mask(cells[i]);
      std::vector<std::vector<int>> next;
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) {
          std::vector<int> key(cells.size());
          for (size_t i = 0; i < cells.size(); ++i)
            key[i] = std::popcount(g.neighbors(v).bits & masks[i]);
          keyed.emplace_back(std::move(key), v);
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<int> cur;
        for (size_t k = 0; k < keyed.size(); ++k) {
          if (k > 0 && keyed[k].first != keyed[k - 1].first) {
            next.push_back(cur);
            cur.clear();
            changed = true;
          }
          cur.push_back(keyed[k].second);
        }
        next.push_back(cur);
      }
      cells = std::move(next);
    }
  }

  bool interchangeable(const std::vector<int>& cell) const {
    std::uint64_t inside = cell_mask(cell);
    std::uint64_t row0 = g.neighbors(cell[0]).bits & ~inside;
    for (size_t i = 1; i < cell.size(); ++i)
      if ((g.neighbors(cell[i]).bits & ~inside) != row0) return false;
    VertexSet s(inside);
    return g.is_clique(s) || g.is_independent(s);
  }

  void leaf(const std::vector<std::vector<int>>& cells) {
    std::vector<int> perm(n);
    int pos = 0;
    for (const auto& cell : cells) perm[cell[0]] = pos++;
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[perm[v]] = v;
    size_t nbits = 8 + static_cast<size_t>(n) * static_cast<size_t>(n - 1) / 2;
    std::string code((nbits + 7) / 8, '\0');
    code[0] = static_cast<char>(n);
    size_t bit = 8;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (g.adjacent(inv[i], inv[j])) code[bit / 8] |= static_cast<char>(1 << (bit % 8));
        ++bit;
      }
    if (best.empty() || code < best) {
      best = code;
      best_perm = perm;
    }
  }

  void descend(std::vector<std::vector<int>> cells) {
    refine(cells);
    int target = -1;
    for (size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1) {
        target = static_cast<int>(i);
        break;
      }
    if (target < 0) {
      leaf(cells);
      return;
    }
    std::vector<int> cell = cells[static_cast<size_t>(target)];
    size_t branches = interchangeable(cell) ? 1 : cell.size();
    for (size_t k = 0; k < branches; ++k) {
      std::vector<std::vector<int>> split;
      for (size_t i = 0; i < cells.size(); ++i) {
        if (static_cast<int>(i) != target) {
          split.push_back(cells[i]);
          continue;
        }
        std::vector<int> rest;
        for (size_t j = 0; j < cell.size(); ++j)
          if (j != k) rest.push_back(cell[j]);
        split.push_back({cell[k]});
        split.push_back(rest);
      }
      descend(std::move(split));
    }
  }

  void run() {
    if (n == 0) {
      best = std::string(1, '\0');
      return;
    }
    std::vector<std::vector<int>> cells(1);
    for (int v = 0; v < n; ++v) cells[0].push_back(v);
    descend(std::move(cells));
  }
};

}  // namespace

std::string canonical_form(const Graph& g) {
  if (g.n() > kCanonicalBound) throw std::invalid_argument("canonical_form: order above supported bound");
  Canonizer c(g);
  c.run();
  return c.best;
}

std::vector<int> canonical_labeling(const Graph& g) {
  if (g.n() > kCanonicalBound) throw std::invalid_argument("canonical_labeling: order above supported bound");
  Canonizer c(g);
  c.run();
  return c.best_perm;
}

}  // namespace cag
