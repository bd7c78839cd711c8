#pragma once

#include <optional>
#include <vector>

#include "cag/graph.hpp"

namespace cag {

/// Injective map phi with pattern u~v iff phi(u)~phi(v) in host (induced),
/// or nullopt.  `candidates`, when given, restricts the image of each
/// pattern vertex.  Deterministic: candidates are tried in ascending order.
std::optional<std::vector<int>> find_induced_copy(const Graph& host, const Graph& pattern);
std::optional<std::vector<int>> find_induced_copy(const Graph& host, const Graph& pattern,
                                                  const std::vector<VertexSet>& candidates);

}  // namespace cag
