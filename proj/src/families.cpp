#include "cag/families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cag {

int OtimesSpec::ell() const { return std::accumulate(seq.begin(), seq.end(), 0); }

int OtimesSpec::order() const {
  int even = 0;
  for (size_t i = 0; i < seq.size(); i += 2) even += seq[i];
  return p() + 1 + ell() + even;
}

bool OtimesSpec::valid() const {
  if (seq.size() < 2 || seq.size() % 2 != 0) return false;
  for (int a : seq)
    if (a < 1) return false;
  return true;
}

bool OtimesSpec::proper() const {
  if (!valid()) return false;
  auto norm = otimes_normalize(*this).seq;
  return norm != std::vector<int>{1, 1} && norm != std::vector<int>{1, 2};
}

OtimesSpec otimes_normalize(const OtimesSpec& spec) {
  if (!spec.valid()) throw std::invalid_argument("otimes: invalid sequence");
  const auto& a = spec.seq;
  int m = static_cast<int>(a.size());
  std::vector<int> reflected(m);
  reflected[0] = a[0];
  for (int j = 1; j < m; ++j) reflected[j] = a[m - j];
  std::vector<int> best = a;
  for (const auto& base : {a, reflected})
    for (int r = 0; r < m; r += 2) {
      std::vector<int> rot(m);
      for (int j = 0; j < m; ++j) rot[j] = base[(j + r) % m];
      best = std::min(best, rot);
    }
  return OtimesSpec{best};
}

LabeledGraph gadget(int k) {
  if (k < 1) throw std::invalid_argument("gadget: k must be positive");
  Graph g(2 * k + 1);
  // v_1..v_k are 0..k-1; w_0..w_k are k..2k.
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
  for (int i = 0; i <= k; ++i)
    for (int t = 1; t <= k; ++t)
      if (t != i && t != i + 1) g.add_edge(k + i, t - 1);
  LabeledGraph out{std::move(g), {}};
  for (int i = 0; i < k; ++i) out.labels["v"].push_back(i);
  for (int i = 0; i <= k; ++i) out.labels["w"].push_back(k + i);
  return out;
}

LabeledGraph otimes(const OtimesSpec& spec) {
  if (!spec.valid()) throw std::invalid_argument("otimes: invalid sequence");
  const auto& a = spec.seq;
  int p = spec.p();
  Graph g(spec.order());
  LabeledGraph out;
  out.labels["c"] = {0};

  // Lay vertices out: c, then per segment in circular order.
  std::vector<std::vector<int>> gv(p), gw(p), pv(p);
  int next = 1;
  for (int i = 0; i < p; ++i) {
    int k = a[2 * i];
    for (int j = 0; j < k; ++j) gv[i].push_back(next++);
    for (int j = 0; j <= k; ++j) gw[i].push_back(next++);
    for (int j = 0; j < a[2 * i + 1]; ++j) pv[i].push_back(next++);
  }

  for (int i = 0; i < p; ++i) {
    int k = a[2 * i];
    for (int x = 0; x < k; ++x)
      for (int y = x + 1; y < k; ++y) g.add_edge(gv[i][x], gv[i][y]);
    for (int w = 0; w <= k; ++w)
      for (int t = 1; t <= k; ++t)
        if (t != w && t != w + 1) g.add_edge(gw[i][w], gv[i][t - 1]);
    // Clique vertices reach everything outside their own gadget.
    for (int v : gv[i]) {
      g.add_edge(v, 0);
      for (int j = 0; j < p; ++j) {
        for (int q : pv[j]) g.add_edge(v, q);
        if (j == i) continue;
        for (int u : gv[j])
          if (u > v) g.add_edge(v, u);
        for (int u : gw[j]) g.add_edge(v, u);
      }
    }
    for (size_t j = 0; j + 1 < pv[i].size(); ++j) g.add_edge(pv[i][j], pv[i][j + 1]);
    // Right end of gadget i meets path i; right end of path i meets the next gadget.
    g.add_edge(gw[i].back(), pv[i].front());
    g.add_edge(pv[i].back(), gw[(i + 1) % p].front());
  }

  // Global numbering along the hole of the flipped graph: v_1..v_ell runs
  // through gadget cliques and paths in order; w_t sits between v_t and
  // v_{t+1} where it exists.
  std::vector<int> vglobal, wglobal(spec.ell(), -1);
  int offset = 0;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j <= a[2 * i]; ++j) wglobal[(offset + j) % spec.ell()] = gw[i][j];
    for (int v : gv[i]) vglobal.push_back(v);
    offset += a[2 * i];
    for (int q : pv[i]) vglobal.push_back(q);
    offset += a[2 * i + 1];
  }

  out.graph = std::move(g);
  for (int i = 0; i < p; ++i) {
    out.labels["g" + std::to_string(i) + ".v"] = gv[i];
    out.labels["g" + std::to_string(i) + ".w"] = gw[i];
    out.labels["p" + std::to_string(i)] = pv[i];
  }
  out.labels["v.global"] = vglobal;
  out.labels["w.global"] = wglobal;
  return out;
}

Graph sun(int k) {
  if (k < 2) throw std::invalid_argument("sun: k must be at least 2");
  Graph g(2 * k);
  for (int i = 0; i < 2 * k; ++i) g.add_edge(i, (i + 1) % (2 * k));
  for (int i = 0; i < 2 * k; i += 2)
    for (int j = i + 2; j < 2 * k; j += 2) g.add_edge(i, j);
  return g;
}

Graph sun_complement(int k) { return complement(sun(k)); }

Graph sun_complement_plus(int k) {
  if (k < 2) throw std::invalid_argument("sun_complement_plus: k must be at least 2");
  Graph base = sun_complement(k);
  Graph g = add_isolated_vertex(base);
  for (int v = 0; v < base.n(); ++v)
    if (base.degree(v) == 2 * k - 3) g.add_edge(base.n(), v);
  return g;
}

Graph long_claw() {
  return make_graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

Graph whipping_top() {
  Graph g(7);
  for (int i = 0; i + 1 < 5; ++i) g.add_edge(i, i + 1);
  for (int i = 0; i < 5; ++i) g.add_edge(5, i);
  g.add_edge(6, 2);
  return g;
}

Graph dag_graph(int order) {
  if (order < 6) throw std::invalid_argument("dag_graph: order must be at least 6");
  int k = order;
  Graph g(k);
  for (int i = 0; i + 1 <= k - 3; ++i) g.add_edge(i, i + 1);  // path 0..k-3
  for (int i = 1; i <= k - 4; ++i) g.add_edge(k - 2, i);
  g.add_edge(k - 1, k - 2);
  return g;
}

Graph ddag_graph(int order) {
  if (order < 6) throw std::invalid_argument("ddag_graph: order must be at least 6");
  int k = order;
  Graph g(k);
  for (int i = 0; i + 1 <= k - 4; ++i) g.add_edge(i, i + 1);  // path 0..k-4
  int v1 = k - 3, v2 = k - 2, c = k - 1;
  g.add_edge(v1, 0);
  g.add_edge(v2, k - 4);
  for (int i = 1; i <= k - 5; ++i) {
    g.add_edge(v1, i);
    g.add_edge(v2, i);
  }
  g.add_edge(v1, v2);
  g.add_edge(c, v1);
  g.add_edge(c, v2);
  return g;
}

Graph net() {
  return make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {4, 1}, {5, 2}});
}

Graph net_star() { return add_isolated_vertex(net()); }

std::vector<LabeledGraph> fig7_graphs() {
  std::vector<LabeledGraph> out(6);

  out[0].graph = net_star();
  out[0].labels = {{"triangle", {0, 1, 2}}, {"pendants", {3, 4, 5}}, {"isolated", {6}}};

  {  // (b): complement of the 4-sun plus a vertex on a diagonal clique pair.
    Graph g(9);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
    for (int i = 0; i < 4; ++i) {
      g.add_edge(4 + i, i);
      g.add_edge(4 + i, (i + 1) % 4);
    }
    g.add_edge(8, 0);
    g.add_edge(8, 2);
    out[1].graph = std::move(g);
    out[1].labels = {{"clique", {0, 1, 2, 3}}, {"outer", {4, 5, 6, 7}}, {"c", {8}}};
  }

  {  // (c): triangle, a hub on it, and two private vertices per triangle edge,
     //      one of each pair also meeting the hub.
    Graph g(10);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    for (int i = 0; i < 3; ++i) g.add_edge(3, i);
    const int pairs[3][2] = {{0, 1}, {1, 2}, {2, 0}};
    for (int e = 0; e < 3; ++e) {
      int inner = 4 + 2 * e, outer = 5 + 2 * e;
      g.add_edge(inner, pairs[e][0]);
      g.add_edge(inner, pairs[e][1]);
      g.add_edge(inner, 3);
      g.add_edge(outer, pairs[e][0]);
      g.add_edge(outer, pairs[e][1]);
    }
    out[2].graph = std::move(g);
    out[2].labels = {{"triangle", {0, 1, 2}}, {"hub", {3}}, {"inner", {4, 6, 8}}, {"outer", {5, 7, 9}}};
  }

  {  // (d): K4 with three two-of-clique vertices (one also on the hub) and two pendants.
    Graph g(9);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
    g.add_edge(4, 0);
    g.add_edge(4, 1);
    g.add_edge(4, 3);
    g.add_edge(5, 1);
    g.add_edge(5, 2);
    g.add_edge(6, 2);
    g.add_edge(6, 3);
    g.add_edge(7, 1);
    g.add_edge(8, 3);
    out[3].graph = std::move(g);
    out[3].labels = {{"clique", {0, 1, 2, 3}}, {"c", {0}}, {"pendants", {7, 8}}};
  }

  {  // (e): net with one pendant leg extended by the thick edge.
    Graph g = add_isolated_vertex(net());
    g.add_edge(6, 3);
    out[4].graph = std::move(g);
    out[4].labels = {{"triangle", {0, 1, 2}}, {"tail", {3, 6}}, {"thick", {6, 3}}};
  }

  {  // (f): the grid drawing; equals (d) once the two thick top edges go.
    Graph g(9);
    const std::pair<int, int> edges[] = {
        {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},        // K4 on A,B,C,D
        {4, 0}, {4, 1}, {4, 2}, {4, 5}, {4, 6},                // E row
        {5, 1}, {6, 2}, {7, 1}, {7, 3}, {8, 2}, {8, 3}};
    for (auto [u, v] : edges) g.add_edge(u, v);
    out[5].graph = std::move(g);
    out[5].labels = {{"clique", {0, 1, 2, 3}}, {"thick", {4, 5, 4, 6}}};
  }

  return out;
}

namespace {

// Enumerate normalized sequences under a predicate-driven budget.
template <typename Keep>
std::vector<OtimesSpec> enumerate_specs(const Keep& keep, const auto& may_extend) {
  std::vector<OtimesSpec> specs;
  std::vector<int> cur;
  auto recurse = [&](auto&& self) -> void {
    if (cur.size() >= 2 && cur.size() % 2 == 0) {
      OtimesSpec s{cur};
      if (keep(s) && otimes_normalize(s).seq == cur) specs.push_back(s);
    }
    for (int a = 1;; ++a) {
      cur.push_back(a);
      if (!may_extend(cur)) {
        cur.pop_back();
        break;
      }
      self(self);
      cur.pop_back();
    }
  };
  recurse(recurse);
  std::sort(specs.begin(), specs.end(),
            [](const OtimesSpec& a, const OtimesSpec& b) { return a.seq < b.seq; });
  return specs;
}

}  // namespace

std::vector<OtimesSpec> otimes_specs_upto(int n) {
  auto keep = [n](const OtimesSpec& s) { return s.order() <= n && s.proper(); };
  auto may_extend = [n](const std::vector<int>& cur) {
    // Cheapest completion: close an odd-length sequence with a path of one.
    int sum = std::accumulate(cur.begin(), cur.end(), 0);
    int even = 0;
    for (size_t i = 0; i < cur.size(); i += 2) even += cur[i];
    int m = static_cast<int>(cur.size());
    int min_order = (m % 2 == 0) ? m / 2 + 1 + sum + even : (m + 1) / 2 + 1 + sum + 1 + even;
    return min_order <= n;
  };
  return enumerate_specs(keep, may_extend);
}

std::vector<OtimesSpec> otimes_specs_ell_upto(int max_ell, bool proper_only) {
  auto keep = [=](const OtimesSpec& s) {
    return s.ell() <= max_ell && (!proper_only || s.proper());
  };
  auto may_extend = [=](const std::vector<int>& cur) {
    int sum = std::accumulate(cur.begin(), cur.end(), 0);
    int min_ell = sum + (cur.size() % 2 == 0 ? 0 : 1);
    return min_ell <= max_ell;
  };
  return enumerate_specs(keep, may_extend);
}

std::vector<FamilyMember> forbidden_family_upto(int n) {
  std::vector<FamilyMember> raw;
  auto push = [&raw](std::string family, std::vector<int> params, LabeledGraph lg) {
    raw.push_back({std::move(family), std::move(params), std::move(lg)});
  };

  if (n >= 7) push("long-claw", {}, {long_claw(), {}});
  if (n >= 8) push("whipping-top-star", {}, {add_isolated_vertex(whipping_top()), {}});
  auto fig7 = fig7_graphs();
  const char* fig_names[] = {"fig7a", "fig7b", "fig7c", "fig7d", "fig7e", "fig7f"};
  for (int i = 0; i < 6; ++i)
    if (fig7[i].graph.n() <= n) push(fig_names[i], {}, fig7[i]);
  for (int k = 3; 2 * k + 1 <= n; ++k)
    push("sun-complement-plus", {k}, {sun_complement_plus(k), {}});

  // All normalized proper sequences whose graph fits.
  for (const auto& s : otimes_specs_upto(n)) push("otimes", s.seq, otimes(s));

  std::sort(raw.begin(), raw.end(), [](const FamilyMember& a, const FamilyMember& b) {
    if (a.labeled.graph.n() != b.labeled.graph.n()) return a.labeled.graph.n() < b.labeled.graph.n();
    if (a.family != b.family) return a.family < b.family;
    return a.params < b.params;
  });

  std::vector<FamilyMember> out;
  std::vector<std::string> seen;
  for (auto& m : raw) {
    std::string canon = canonical_form(m.labeled.graph);
    if (std::find(seen.begin(), seen.end(), canon) != seen.end()) continue;
    seen.push_back(canon);
    out.push_back(std::move(m));
  }
  return out;
}

std::optional<Graph> family_by_name(const std::string& family, const std::vector<int>& params) {
  try {
    if (family == "long-claw") return long_claw();
    if (family == "whipping-top") return whipping_top();
    if (family == "whipping-top-star") return add_isolated_vertex(whipping_top());
    if (family == "net") return net();
    if (family == "net-star") return net_star();
    if (family.rfind("fig7", 0) == 0 && family.size() == 5) {
      int idx = family[4] - 'a';
      if (idx < 0 || idx > 5) return std::nullopt;
      return fig7_graphs()[idx].graph;
    }
    if (family == "sun") return sun(params.at(0));
    if (family == "sun-complement") return sun_complement(params.at(0));
    if (family == "sun-complement-plus") return sun_complement_plus(params.at(0));
    if (family == "dag") return dag_graph(params.at(0));
    if (family == "ddag") return ddag_graph(params.at(0));
    if (family == "otimes") return otimes(OtimesSpec{params}).graph;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace cag
