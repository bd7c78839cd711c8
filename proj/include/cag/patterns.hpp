#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cag/flip.hpp"
#include "cag/graph.hpp"

namespace cag {

enum class Role { Free, InsideNs, OutsideNs };

/// Forbidden configuration: a graph whose vertices may be pinned to N_G(s)
/// or to V(G) minus N_G[s], and whose marked edges must also be edges of G.
struct AnnotatedPattern {
  std::string family;
  std::vector<int> params;
  Graph graph;
  std::vector<Role> roles;
  std::vector<std::pair<int, int>> annotated_edges;
};

/// All forbidden configurations on at most max_size vertices: holes, the
/// minimal non-interval graphs, and the sixteen annotated shapes, with the
/// four growing families instantiated along their paths.
std::vector<AnnotatedPattern> pattern_library(int max_size);

/// Regenerate one pattern from its name and parameters.
std::optional<AnnotatedPattern> pattern_by_name(const std::string& family,
                                                const std::vector<int>& params);

/// Embedding of the pattern into F.result that avoids s, respects roles,
/// and maps every annotated edge onto an edge of F.base.
std::optional<std::vector<int>> find_annotated_copy(const FlipGraph& f, const AnnotatedPattern& p);

struct ConfigurationHit {
  std::string family;
  std::vector<int> params;
  std::vector<int> phi;                               // pattern -> vertices of G
  std::vector<std::pair<int, int>> annotated_images;  // edges required in G
};

/// Flip-route engine: a hole of G^s (fast path) or the first annotated copy
/// over the library, smallest pattern first.  Requires the base graph to be
/// chordal with no universal vertices.
std::optional<ConfigurationHit> has_forbidden_configuration(const FlipGraph& f);

}  // namespace cag
