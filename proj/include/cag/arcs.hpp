#pragma once

#include <optional>
#include <vector>

#include "cag/families.hpp"
#include "cag/graph.hpp"

namespace cag {

/// Closed arc [lp, rp] on an integer circle, covering lp, lp+1, ..., rp
/// (wrapping); lp == rp is a point arc.  full marks a whole-circle arc.
struct Arc {
  int lp = 0;
  int rp = 0;
  bool full = false;
};

/// One closed arc per vertex on a circle of integer length.
struct ArcModel {
  int circle_len = 1;
  std::vector<Arc> arcs;

  bool contains(const Arc& a, int point) const;
  bool intersect(const Arc& a, const Arc& b) const;
};

Graph intersection_graph(const ArcModel& m);

/// True iff the model's intersection graph equals g under identity labels.
bool realizes(const ArcModel& m, const Graph& g);

struct HellyVerdict {
  bool helly = true;
  VertexSet violating_clique;  // pairwise-intersecting arcs with no common point
};

HellyVerdict is_helly(const ArcModel& m);

/// Replace [lp, rp] by [rp, lp] on the chosen vertices; full arcs rejected.
ArcModel flip_arcs(const ArcModel& m, VertexSet s);

// Fixed models of the 3-sun from the illustrations: (b) flips to an interval
// model of the net at the clique {2,4,6}; (c) is the non-Helly witness.
// Vertex ids 0..5 stand for the drawing's 1..6.
ArcModel fig1b_model();
ArcModel fig1c_model();

/// Model on circle 4*ell realizing flip(otimes(spec), c).result minus c,
/// with vertex ids of otimes(spec) (c's slot unused).
ArcModel base_model_otimes(const OtimesSpec& spec);

/// Helly model of otimes(spec) minus the single vertex x, on circle 4*ell
/// (the sun-star case is served from a verified fixture table).  Ids are
/// those of otimes(spec); x's slot is unused.
ArcModel model_otimes_minus(const OtimesSpec& spec, int x);

/// Exhaustive circular-arc realizability for n <= 8: a realizing model or
/// nullopt after the search space is spent.  Runtimes stay in single-digit
/// milliseconds even at the cap (the dense K8 is the measured worst).
std::optional<ArcModel> ca_oracle(const Graph& g);

/// Same search restricted to models passing is_helly; n <= 6.
std::optional<ArcModel> hca_oracle(const Graph& g);

/// Interval realizability by endpoint-order backtracking on a line (used as
/// the independent cross-check for interval recognition); n <= 8.
bool interval_oracle(const Graph& g);

}  // namespace cag
