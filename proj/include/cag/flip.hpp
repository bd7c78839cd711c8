#pragma once

#include <utility>
#include <vector>

#include "cag/graph.hpp"

namespace cag {

/// The auxiliary graph G^s of a chordal graph G at a simplicial vertex s,
/// on the same vertex ids.
struct FlipGraph {
  Graph base;       // G
  int s = -1;       // simplicial in base
  Graph result;     // G^s
  VertexSet inside; // N_G[s]
};

/// Build G^s by the three edge rules:
///  - edges outside N[s] copy G;
///  - u,v in N[s] are adjacent iff some vertex is adjacent to neither;
///  - u in N[s], v outside are adjacent iff N[v] is not within N[u].
FlipGraph flip(const Graph& g, int s);

/// Edges of G^s that are edges of G with at least one end in N[s].
std::vector<std::pair<int, int>> collateral_edges(const FlipGraph& f);

/// All w outside N[s] whose closed neighborhood splits the clique K of G^s
/// against N[s]: N_G[w] and N_G[s] partition K.
VertexSet witnesses(const FlipGraph& f, VertexSet k);

/// Iteratively delete universal vertices; map gives surviving old ids.
std::pair<Graph, std::vector<int>> strip_universal(const Graph& g);

}  // namespace cag
