#include "cag/arcs.hpp"

#include <stdexcept>

#include "cag/chordal.hpp"

namespace cag {
namespace {

int wrap(int x, int len) { return ((x % len) + len) % len; }

}  // namespace

bool ArcModel::contains(const Arc& a, int point) const {
  if (a.full) return true;
  int off = wrap(point - a.lp, circle_len);
  int span = wrap(a.rp - a.lp, circle_len);
  return off <= span;
}

bool ArcModel::intersect(const Arc& a, const Arc& b) const {
  if (a.full || b.full) return true;
  return contains(a, b.lp) || contains(a, b.rp) || contains(b, a.lp);
}

Graph intersection_graph(const ArcModel& m) {
  Graph g(static_cast<int>(m.arcs.size()));
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (m.intersect(m.arcs[u], m.arcs[v])) g.add_edge(u, v);
  return g;
}

bool realizes(const ArcModel& m, const Graph& g) {
  if (static_cast<int>(m.arcs.size()) != g.n())
    throw std::invalid_argument("realizes: vertex sets differ");
  return intersection_graph(m) == g;
}

HellyVerdict is_helly(const ArcModel& m) {
  Graph g = intersection_graph(m);
  for (VertexSet clique : maximal_cliques(g)) {
    if (clique.size() <= 1) continue;
    bool any_point = false;
    bool all_full = true;
    for (int v : clique) all_full &= m.arcs[v].full;
    std::vector<int> candidates;
    if (all_full) candidates.push_back(0);
    for (int v : clique)
      if (!m.arcs[v].full) candidates.push_back(m.arcs[v].lp);
    for (int p : candidates) {
      bool all = true;
      for (int v : clique) all &= m.contains(m.arcs[v], p);
      if (all) {
        any_point = true;
        break;
      }
    }
    if (!any_point) return {false, clique};
  }
  return {};
}

ArcModel flip_arcs(const ArcModel& m, VertexSet s) {
  ArcModel out = m;
  for (int v : s) {
    if (v < 0 || v >= static_cast<int>(m.arcs.size()))
      throw std::invalid_argument("flip_arcs: no such vertex");
    if (m.arcs[v].full) throw std::invalid_argument("flip_arcs: cannot flip a full-circle arc");
    std::swap(out.arcs[v].lp, out.arcs[v].rp);
  }
  return out;
}

// Transcribed from the drawings, with endpoint ties placed so that the
// stated properties all hold: (b) realizes the 3-sun, any two of the clique
// arcs {2,4,6} cover the circle, the model is Helly, and flipping {2,4,6}
// leaves an interval model of the net; (c) realizes the 3-sun and the three
// clique arcs share no common point.
ArcModel fig1b_model() {
  ArcModel m;
  m.circle_len = 12;
  m.arcs = {{9, 11}, {8, 4}, {1, 3}, {0, 8}, {5, 7}, {4, 0}};
  return m;
}

ArcModel fig1c_model() {
  ArcModel m;
  m.circle_len = 18;
  m.arcs = {{4, 5}, {15, 6}, {16, 17}, {9, 0}, {10, 11}, {3, 12}};
  return m;
}

namespace {

struct OtimesLayout {
  LabeledGraph lg;
  int ell = 0;
  std::vector<int> vglobal;  // vglobal[i] = vertex id of v_{i+1}
  std::vector<int> wglobal;  // wglobal[i] = vertex id of w_i, -1 if absent
  VertexSet clique;          // N(c)

  explicit OtimesLayout(const OtimesSpec& spec) : lg(otimes(spec)) {
    ell = spec.ell();
    vglobal = lg.labels.at("v.global");
    wglobal = lg.labels.at("w.global");
    for (int v : lg.graph.neighbors(0)) clique.insert(v);
  }
  // v_k with circular index arithmetic (k may be 0 or ell meaning v_ell).
  int v_id(int k) const { return vglobal[((k - 1) % ell + ell) % ell]; }
  bool v_in_clique(int k) const { return clique.contains(v_id(k)); }
};

Arc eq1_arc(const OtimesLayout& lay, int i, int len) {
  bool flipped = lay.v_in_clique(i);
  int a = wrap(4 * i - 3, len), b = wrap(4 * i + 3, len);
  return flipped ? Arc{b, a} : Arc{a, b};
}

ArcModel sun_star_minus_fixture(const OtimesSpec& spec, int x);

}  // namespace

ArcModel base_model_otimes(const OtimesSpec& spec) {
  if (!spec.proper()) throw std::invalid_argument("base_model_otimes: spec is not a proper sequence");
  if (spec.ell() < 4 && !(otimes_normalize(spec).seq == std::vector<int>{2, 1}))
    throw std::invalid_argument("base_model_otimes: needs ell >= 4");
  OtimesLayout lay(spec);
  int len = 4 * lay.ell;
  ArcModel m;
  m.circle_len = len;
  m.arcs.assign(lay.lg.graph.n() - 1, Arc{});
  // Ids are shifted down by one: c is vertex 0 of otimes(spec).
  for (int i = 1; i <= lay.ell; ++i)
    m.arcs[lay.v_id(i) - 1] = {wrap(4 * i - 3, len), wrap(4 * i + 3, len)};
  for (int i = 0; i < lay.ell; ++i)
    if (lay.wglobal[i] >= 0) m.arcs[lay.wglobal[i] - 1] = {wrap(4 * i + 2, len), wrap(4 * i + 2, len)};
  return m;
}

ArcModel model_otimes_minus(const OtimesSpec& spec, int x) {
  if (!spec.proper()) throw std::invalid_argument("model_otimes_minus: spec is not a proper sequence");
  OtimesLayout lay(spec);
  const Graph& g = lay.lg.graph;
  if (x < 0 || x >= g.n()) throw std::invalid_argument("model_otimes_minus: no such vertex");
  if (lay.ell < 4) return sun_star_minus_fixture(spec, x);

  int len = 4 * lay.ell;
  auto new_id = [x](int old) { return old - (old > x ? 1 : 0); };
  ArcModel m;
  m.circle_len = len;
  m.arcs.assign(g.n() - 1, Arc{});
  for (int i = 0; i < lay.ell; ++i)
    if (lay.wglobal[i] >= 0 && lay.wglobal[i] != x)
      m.arcs[new_id(lay.wglobal[i])] = {wrap(4 * i + 2, len), wrap(4 * i + 2, len)};

  auto set_v = [&](int i, Arc a) { m.arcs[new_id(lay.v_id(i))] = a; };
  auto set_c = [&](Arc a) { m.arcs[new_id(0)] = a; };

  if (x == 0) {  // minus c: flip every clique arc
    for (int i = 1; i <= lay.ell; ++i) set_v(i, eq1_arc(lay, i, len));
    return m;
  }

  // Locate x along the hole numbering.
  int vk = -1, wk = -1;
  for (int i = 1; i <= lay.ell; ++i)
    if (lay.v_id(i) == x) vk = i;
  for (int i = 0; i < lay.ell; ++i)
    if (lay.wglobal[i] == x) wk = i;

  if (vk >= 0) {
    for (int i = 1; i <= lay.ell; ++i)
      if (i != vk) set_v(i, eq1_arc(lay, i, len));
    set_c({wrap(4 * vk, len), wrap(4 * vk, len)});
    return m;
  }

  if (wk < 0) throw std::invalid_argument("model_otimes_minus: vertex is not on the layout");
  int k = wk;
  for (int i = 1; i <= lay.ell; ++i) {
    int rel = ((i - k) % lay.ell + lay.ell) % lay.ell;  // 0 when i == v_k slot, 1 when v_{k+1}
    if (rel == 0 || rel == 1) continue;
    set_v(i, eq1_arc(lay, i, len));
  }
  bool a_in = lay.v_in_clique(k), b_in = lay.v_in_clique(k + 1);
  if (a_in && b_in) {
    set_v(k, {wrap(4 * k + 1, len), wrap(4 * k - 3, len)});
    set_v(k + 1, {wrap(4 * k + 7, len), wrap(4 * k + 3, len)});
    set_c({wrap(4 * k + 2, len), wrap(4 * k + 2, len)});
  } else if (a_in && !b_in) {
    set_v(k, {wrap(4 * k, len), wrap(4 * k - 3, len)});
    set_v(k + 1, {wrap(4 * k + 1, len), wrap(4 * k + 7, len)});
    set_c({wrap(4 * k, len), wrap(4 * k, len)});
  } else if (!a_in && b_in) {
    set_v(k, {wrap(4 * k - 3, len), wrap(4 * k + 3, len)});
    set_v(k + 1, {wrap(4 * k + 7, len), wrap(4 * k + 4, len)});
    set_c({wrap(4 * k + 4, len), wrap(4 * k + 4, len)});
  } else {
    throw std::logic_error("model_otimes_minus: w vertex with no clique neighbor on the hole");
  }
  return m;
}

namespace {

// Fixture models for the one proper arrangement below the 4*ell
// construction (the sun with an isolated vertex), produced by hca_oracle
// and re-verified against it in the test suite.  Keyed by the deleted
// vertex of otimes({2,1}): c=0, v1=1, v2=2, w0=3, w1=4, w2=5, q=6.
ArcModel sun_star_minus_fixture(const OtimesSpec& spec, int x) {
  if (!(otimes_normalize(spec).seq == std::vector<int>{2, 1}))
    throw std::invalid_argument("model_otimes_minus: no construction below ell = 4");
  if (!(spec.seq == std::vector<int>{2, 1}))
    throw std::invalid_argument("model_otimes_minus: pass the normalized sequence (2,1)");
  ArcModel m;
  m.circle_len = 12;
  switch (x) {
    case 0:  // minus c: the sun itself
      m.arcs = {{0, 5}, {4, 7}, {6, 8}, {10, 11}, {1, 3}, {2, 9}};
      break;
    case 1:  // minus v1
      m.arcs = {{0, 2}, {1, 5}, {3, 6}, {10, 11}, {7, 8}, {4, 9}};
      break;
    case 2:  // minus v2
      m.arcs = {{0, 2}, {1, 5}, {7, 8}, {10, 11}, {3, 6}, {4, 9}};
      break;
    case 3:  // minus w0
      m.arcs = {{0, 3}, {1, 7}, {2, 5}, {10, 11}, {6, 8}, {4, 9}};
      break;
    case 4:  // minus the isolated vertex: the sun itself remains
      m.arcs = {{0, 2}, {7, 3}, {1, 8}, {4, 6}, {9, 10}, {5, 11}};
      break;
    case 5:  // minus w2
      m.arcs = {{0, 3}, {1, 5}, {2, 7}, {6, 8}, {10, 11}, {4, 9}};
      break;
    case 6:  // minus q
      m.arcs = {{0, 2}, {9, 3}, {1, 5}, {4, 6}, {7, 8}, {10, 11}};
      break;
    default:
      throw std::invalid_argument("model_otimes_minus: no such vertex");
  }
  return m;
}

}  // namespace

}  // namespace cag
