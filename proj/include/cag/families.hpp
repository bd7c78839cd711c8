#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cag/graph.hpp"

namespace cag {

/// Defining sequence (a0,...,a_{2p-1}) of a circular gadget/path arrangement.
struct OtimesSpec {
  std::vector<int> seq;

  int p() const { return static_cast<int>(seq.size()) / 2; }
  int ell() const;          // sum of all entries
  int order() const;        // p + 1 + sum(a_i) + sum(a_{2i})
  bool valid() const;       // even length >= 2, all entries >= 1
  bool proper() const;      // valid and not equivalent to (1,1) or (1,2)
};

/// Lexicographic minimum over the dihedral orbit (pair rotations and the
/// arrangement reversal).
OtimesSpec otimes_normalize(const OtimesSpec& spec);

/// Graph plus role labels ("c", "g0.v", "g0.w", "p0", "v.global", ...).
struct LabeledGraph {
  Graph graph;
  std::map<std::string, std::vector<int>> labels;
};

/// Split gadget D_k: clique v_1..v_k, independent w_0..w_k with
/// N(w_i) = {v_1..v_k} minus {v_i, v_{i+1}}; ends w_0 and w_k.
LabeledGraph gadget(int k);

/// The circular arrangement of gadgets D_{a_{2i}} and paths P_{a_{2i+1}}
/// around the special vertex c.  Labels: "c"; "gI.v", "gI.w", "pI" per
/// segment; "v.global" = v_1..v_ell in hole order; "w.global" = w_0..w_{ell-1}
/// with -1 where no w vertex exists.
LabeledGraph otimes(const OtimesSpec& spec);

Graph sun(int k);                   // cycle of 2k vertices, evens made a clique
Graph sun_complement(int k);        // the split graph S-bar_k
Graph sun_complement_plus(int k);   // S-bar_k plus a vertex joined to its clique side

Graph long_claw();          // spider with three legs of length two
Graph whipping_top();
Graph dag_graph(int order);   // the "dagger" family, order >= 6; order 6 is the net
Graph ddag_graph(int order);  // the "double dagger" family, order >= 6

Graph net();
Graph net_star();

/// The six hard-coded minimal chordal non-circular-arc graphs of the main
/// figure, in drawing order a..f.
std::vector<LabeledGraph> fig7_graphs();

struct FamilyMember {
  std::string family;        // "long-claw", "whipping-top-star", "fig7a".."fig7f",
                             // "sun-complement-plus", "otimes"
  std::vector<int> params;   // k for the sun family, the sequence for otimes
  LabeledGraph labeled;
};

/// Normalized proper sequences whose graph has at most n vertices, sorted.
std::vector<OtimesSpec> otimes_specs_upto(int n);

/// Normalized sequences (proper or not) with ell() at most the given bound.
std::vector<OtimesSpec> otimes_specs_ell_upto(int max_ell, bool proper_only);

/// Every member of the forbidden-family list with at most n vertices, once
/// per isomorphism class, ordered by (order, family, params).
std::vector<FamilyMember> forbidden_family_upto(int n);

/// Regenerate a named family member (used by certificate verification).
std::optional<Graph> family_by_name(const std::string& family, const std::vector<int>& params);

}  // namespace cag
