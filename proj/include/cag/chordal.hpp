#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cag/graph.hpp"

namespace cag {

/// Result of the elimination-ordering attempt: exactly one member is set.
struct PeoResult {
  std::optional<std::vector<int>> order;  // v1..vn, each simplicial in the rest
  std::optional<std::vector<int>> hole;   // induced cycle of length >= 4
};

PeoResult perfect_elimination_order(const Graph& g);
bool is_chordal(const Graph& g);
VertexSet simplicial_vertices(const Graph& g);
std::optional<std::vector<int>> find_hole(const Graph& g);

/// All maximal cliques, each once.  Linear PEO route for chordal inputs,
/// Bron-Kerbosch fallback otherwise.
std::vector<VertexSet> maximal_cliques(const Graph& g);

bool has_asteroidal_triple(const Graph& g);

struct IntervalVerdict {
  bool interval = false;
  std::optional<std::vector<int>> hole;
  // Forbidden non-interval subgraph when chordal: family name, order, and
  // the embedding phi (pattern vertex -> host vertex).
  std::optional<std::string> family;
  std::vector<int> phi;
};

/// Interval recognition via chordality + asteroidal-triple-freeness, with a
/// hole or minimal non-interval certificate on failure.
IntervalVerdict is_interval(const Graph& g);

}  // namespace cag
