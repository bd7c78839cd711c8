#pragma once

#include <optional>
#include <vector>

#include "cag/certificates.hpp"
#include "cag/graph.hpp"

namespace cag {

struct CaVerdict {
  bool ca = false;
  std::optional<Certificate> certificate;  // set when ca is false
};

/// Flip route: strip universal vertices, flip at the least simplicial
/// vertex, and hunt forbidden configurations.  Throws when g is not chordal.
CaVerdict is_ca_via_flip(const Graph& g);

/// Family route: search induced copies of the forbidden-family list.
CaVerdict is_ca_via_families(const Graph& g);

/// Helly circular-arc recognition for chordal inputs, by its family list.
CaVerdict is_hca_chordal(const Graph& g);

bool is_minimal_forbidden_ca(const Graph& g);

/// Canonical representatives of every chordal isomorphism class on n
/// vertices; exhaustive bitmask sweep for n <= 6, simplicial extension of
/// the (n-1)-classes for n == 7.
std::vector<Graph> enumerate_chordal(int n);

bool is_split(const Graph& g);

/// Venn-diagram region (1..5) of a recognized minimal forbidden graph.
int classify_region(const Graph& g);

}  // namespace cag
