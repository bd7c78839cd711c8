#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cag {

inline constexpr int kMaxVertices = 64;

// Canonical labeling is supported up to this order.  Everything the
// acceptance runs need stays at or below 17 vertices; the bound leaves room.
inline constexpr int kCanonicalBound = 24;

/// Set of vertex ids 0..63 packed into one word.
struct VertexSet {
  std::uint64_t bits = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t raw) : bits(raw) {}

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~0ULL : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr bool contains(int v) const { return bits >> v & 1; }
  void insert(int v) { bits |= std::uint64_t{1} << v; }
  void erase(int v) { bits &= ~(std::uint64_t{1} << v); }
  constexpr bool empty() const { return bits == 0; }
  int size() const { return std::popcount(bits); }
  int min() const { return std::countr_zero(bits); }

  constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::uint64_t m = bits; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  // Iteration over set members, ascending.
  struct iterator {
    std::uint64_t rest;
    int operator*() const { return std::countr_zero(rest); }
    iterator& operator++() {
      rest &= rest - 1;
      return *this;
    }
    bool operator!=(const iterator& o) const { return rest != o.rest; }
  };
  iterator begin() const { return {bits}; }
  iterator end() const { return {0}; }
};

/// Finite simple undirected graph on dense ids 0..n-1 with bitmask rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  bool adjacent(int u, int v) const { return adj_[u] >> v & 1; }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  VertexSet closed_neighbors(int v) const { return VertexSet(adj_[v] | (std::uint64_t{1} << v)); }
  int degree(int v) const { return std::popcount(adj_[v]); }
  VertexSet vertices() const { return VertexSet::range(n_); }

  void add_edge(int u, int v);
  bool has_vertex(int v) const { return v >= 0 && v < n_; }

  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  bool is_clique(VertexSet s) const;
  bool is_independent(VertexSet s) const;
  bool is_simplicial(int v) const { return is_clique(closed_neighbors(v)); }
  bool is_universal(int v) const { return degree(v) == n_ - 1; }
  VertexSet common_neighbors(int u, int v) const { return VertexSet(adj_[u] & adj_[v]); }
  bool connected() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

/// Induced subgraph plus the map from new ids back to ids of g.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, VertexSet s);

Graph complement(const Graph& g);
Graph add_isolated_vertex(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Rebuild g with vertex v mapped to perm[v]; perm must be a bijection.
Graph relabel(const Graph& g, const std::vector<int>& perm);

Graph remove_vertex(const Graph& g, int v);

/// Canonical byte string: equal iff isomorphic.  Throws above kCanonicalBound.
std::string canonical_form(const Graph& g);

/// A labeling perm (old -> new) under which g attains its canonical form.
std::vector<int> canonical_labeling(const Graph& g);

/// Vertex bijection phi with u~v in g iff phi(u)~phi(v) in h, if one exists.
std::optional<std::vector<int>> is_isomorphic(const Graph& g, const Graph& h);

// graph6 text format (bit-exact: 6-bit chunks, column-major upper triangle,
// +63 offset).  Only short-form encodings (n <= 62) are supported.
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

}  // namespace cag
