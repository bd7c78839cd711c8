#include "cag/patterns.hpp"

#include <algorithm>

#include "cag/chordal.hpp"
#include "cag/families.hpp"

namespace cag {
namespace {

// The sixteen annotated shapes are transcribed from the figure of forbidden
// configurations that are interval graphs, cross-checked against their
// labeled restatements later in the text.  Square nodes become InsideNs,
// rhombus nodes OutsideNs, everything else Free; thick lines become
// annotated edges.  Where the two renderings of the same shape disagree on
// a node kind, the labeled restatement wins for (d)-(h), (k), (l) (the text
// says those are reproduced one-to-one) and for the left path end of (n)
// (both restatements pin it), while (i), (j), (m), (o), (p) keep the weaker
// first-figure kinds because their restatements are case splits.  The
// exhaustive agreement suites against the arc-model oracle pin these
// choices down.
struct Builder {
  AnnotatedPattern p;

  Builder(std::string family, std::vector<int> params, int n) {
    p.family = std::move(family);
    p.params = std::move(params);
    p.graph = Graph(n);
    p.roles.assign(n, Role::Free);
  }
  Builder& sq(std::initializer_list<int> vs) {
    for (int v : vs) p.roles[v] = Role::InsideNs;
    return *this;
  }
  Builder& rh(std::initializer_list<int> vs) {
    for (int v : vs) p.roles[v] = Role::OutsideNs;
    return *this;
  }
  Builder& e(std::initializer_list<std::pair<int, int>> es) {
    for (auto [u, v] : es) p.graph.add_edge(u, v);
    return *this;
  }
  Builder& a(std::initializer_list<std::pair<int, int>> es) {
    for (auto [u, v] : es) {
      p.graph.add_edge(u, v);
      p.annotated_edges.emplace_back(u, v);
    }
    return *this;
  }
  Builder& path(int from, int to) {
    for (int v = from; v < to; ++v) p.graph.add_edge(v, v + 1);
    return *this;
  }
  AnnotatedPattern done() { return std::move(p); }
};

AnnotatedPattern hole_pattern(int k) {
  Builder b("hole", {k}, k);
  b.path(0, k - 1);
  b.e({{k - 1, 0}});
  return b.done();
}

AnnotatedPattern plain(const std::string& family, std::vector<int> params, Graph g) {
  AnnotatedPattern p;
  p.family = family;
  p.params = std::move(params);
  p.roles.assign(g.n(), Role::Free);
  p.graph = std::move(g);
  return p;
}

AnnotatedPattern fig10_fixed(char letter) {
  switch (letter) {
    case 'a':  // claw, all three edges in G
      return Builder("fig10a", {}, 4).sq({0}).rh({1, 2, 3}).a({{0, 1}, {0, 2}, {0, 3}}).done();
    case 'b':  // two dominating squares over three rhombi
      return Builder("fig10b", {}, 5)
          .sq({0, 1})
          .rh({2, 3, 4})
          .e({{0, 1}, {0, 3}, {0, 4}, {1, 2}})
          .a({{0, 2}, {1, 3}, {1, 4}})
          .done();
    case 'c':  // square triangle against an independent rhombus row
      return Builder("fig10c", {}, 6)
          .sq({0, 1, 2})
          .rh({3, 4, 5})
          .e({{0, 1}, {1, 2}, {0, 2}, {0, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 3}, {2, 4}})
          .a({{0, 3}, {1, 4}, {2, 5}})
          .done();
    case 'd':  // fork: tail x1(rh) - x2 - v(sq) with two pinned rhombus tips
      return Builder("fig10d", {}, 5)
          .sq({0})
          .rh({1, 2, 4})
          .e({{0, 3}, {3, 4}})
          .a({{0, 1}, {0, 2}})
          .done();
    case 'e':  // double fork plus the x1-v2 edge
      return Builder("fig10e", {}, 6)
          .sq({2, 3})
          .rh({0, 4, 5})
          .e({{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 5}, {3, 4}})
          .a({{2, 4}, {3, 5}})
          .done();
    case 'f':  // double fork
      return Builder("fig10f", {}, 6)
          .sq({2, 3})
          .rh({0, 4, 5})
          .e({{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 5}, {3, 4}})
          .a({{2, 4}, {3, 5}})
          .done();
    case 'g':  // two-square path with a rhombus apex and a rhombus mirror
      return Builder("fig10g", {}, 6)
          .sq({1, 2})
          .rh({4, 5})
          .e({{0, 1}, {1, 2}, {2, 3}, {1, 5}, {2, 5}})
          .a({{4, 1}, {4, 2}})
          .done();
    case 'h':  // five-path with a pinned pendant on the middle
      return Builder("fig10h", {}, 6)
          .sq({2})
          .rh({0, 4, 5})
          .e({{0, 1}, {1, 2}, {2, 3}, {3, 4}})
          .a({{2, 5}})
          .done();
    case 'i':  // five-path dominated by a square, rhombus centre
      return Builder("fig10i", {}, 6)
          .sq({5})
          .rh({2})
          .e({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 0}, {5, 1}, {5, 3}, {5, 4}})
          .a({{5, 2}})
          .done();
    case 'j':  // four-path dominated by a square with a pendant
      return Builder("fig10j", {}, 6)
          .sq({0})
          .rh({3, 4})
          .e({{0, 1}, {0, 2}, {0, 5}, {2, 3}, {3, 4}, {4, 5}})
          .a({{0, 3}, {0, 4}})
          .done();
    case 'k':  // bent whipping top
      return Builder("fig10k", {}, 7)
          .sq({5})
          .rh({0, 4, 6})
          .e({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}, {6, 2}})
          .a({{5, 6}})
          .done();
    case 'l':  // whipping-top fragment
      return Builder("fig10l", {}, 6)
          .sq({2})
          .rh({0, 3})
          .e({{0, 1}, {1, 2}, {2, 5}, {4, 0}, {4, 1}, {4, 2}, {4, 3}})
          .a({{2, 3}})
          .done();
    default:
      throw std::invalid_argument("fig10_fixed: unknown letter");
  }
}

// Growing shapes.  Vertex 0 is the square hub throughout.
AnnotatedPattern fig10m(int p) {
  // hub 0, pendant 1, bottom path 2,3..p+2,p+3 fully dominated by the hub
  int n = p + 4;
  Builder b("fig10m", {p}, n);
  b.sq({0}).rh({2, n - 1});
  b.e({{0, 1}});
  b.path(2, n - 1);
  for (int v = 3; v <= n - 2; ++v) b.e({{0, v}});
  b.a({{0, 2}, {0, n - 1}});
  return b.done();
}

AnnotatedPattern fig10n(int p) {
  // hub 0, pendant 1, bottom path 2,3..p+2,p+3; hub misses the left end
  int n = p + 4;
  Builder b("fig10n", {p}, n);
  b.sq({0}).rh({2, n - 1});
  b.e({{0, 1}});
  b.path(2, n - 1);
  for (int v = 3; v <= n - 2; ++v) b.e({{0, v}});
  b.a({{0, n - 1}});
  return b.done();
}

AnnotatedPattern fig10o(int p) {
  // double-dagger shape with one annotated end edge
  int n = p + 5;
  Builder b("fig10o", {p}, n);
  b.sq({0}).rh({n - 1});
  b.e({{1, 0}, {1, 2}, {0, 2}, {0, 3}});
  b.path(3, n - 1);
  for (int v = 4; v <= n - 2; ++v) b.e({{0, v}, {2, v}});
  b.e({{2, n - 1}});
  b.a({{0, n - 1}});
  return b.done();
}

AnnotatedPattern fig10p(int p) {
  // double-dagger shape with both annotated end edges
  int n = p + 5;
  Builder b("fig10p", {p}, n);
  b.sq({0, 2}).rh({3, n - 1});
  b.e({{1, 0}, {1, 2}, {0, 2}, {0, 3}});
  b.path(3, n - 1);
  for (int v = 4; v <= n - 2; ++v) b.e({{0, v}, {2, v}});
  b.e({{2, n - 1}});
  b.a({{0, n - 1}, {2, 3}});
  return b.done();
}

}  // namespace

std::vector<AnnotatedPattern> pattern_library(int max_size) {
  if (max_size < 4) throw std::invalid_argument("pattern_library: needs max_size >= 4");
  std::vector<AnnotatedPattern> lib;
  for (int k = 4; k <= max_size; ++k) lib.push_back(hole_pattern(k));
  for (int k = 6; k <= max_size; ++k) {
    lib.push_back(plain("dag", {k}, dag_graph(k)));
    lib.push_back(plain("ddag", {k}, ddag_graph(k)));
  }
  if (max_size >= 7) {
    lib.push_back(plain("long-claw", {}, long_claw()));
    lib.push_back(plain("whipping-top", {}, whipping_top()));
  }
  for (char c = 'a'; c <= 'l'; ++c) {
    AnnotatedPattern p = fig10_fixed(c);
    if (p.graph.n() <= max_size) lib.push_back(std::move(p));
  }
  for (int p = 1; p + 4 <= max_size; ++p) lib.push_back(fig10m(p));
  for (int p = 2; p + 4 <= max_size; ++p) lib.push_back(fig10n(p));
  for (int p = 1; p + 5 <= max_size; ++p) lib.push_back(fig10o(p));
  for (int p = 1; p + 5 <= max_size; ++p) lib.push_back(fig10p(p));
  std::stable_sort(lib.begin(), lib.end(), [](const AnnotatedPattern& a, const AnnotatedPattern& b) {
    return a.graph.n() < b.graph.n();
  });
  return lib;
}

std::optional<AnnotatedPattern> pattern_by_name(const std::string& family,
                                                const std::vector<int>& params) {
  try {
    if (family == "hole") return hole_pattern(params.at(0));
    if (family == "dag") return plain("dag", params, dag_graph(params.at(0)));
    if (family == "ddag") return plain("ddag", params, ddag_graph(params.at(0)));
    if (family == "long-claw") return plain("long-claw", {}, long_claw());
    if (family == "whipping-top") return plain("whipping-top", {}, whipping_top());
    if (family.rfind("fig10", 0) == 0 && family.size() == 6) {
      char c = family[5];
      if (c >= 'a' && c <= 'l') return fig10_fixed(c);
      if (c == 'm') return fig10m(params.at(0));
      if (c == 'n') return fig10n(params.at(0));
      if (c == 'o') return fig10o(params.at(0));
      if (c == 'p') return fig10p(params.at(0));
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return std::nullopt;
}

namespace {

struct AnnotatedSearcher {
  const FlipGraph& f;
  const AnnotatedPattern& pat;
  std::vector<int> order;
  std::vector<int> phi;
  VertexSet used;
  std::vector<VertexSet> annotated_with;  // per pattern vertex, annotated partners

  AnnotatedSearcher(const FlipGraph& flip, const AnnotatedPattern& p)
      : f(flip), pat(p), phi(p.graph.n(), -1), annotated_with(p.graph.n()) {
    for (auto [u, v] : pat.annotated_edges) {
      annotated_with[u].insert(v);
      annotated_with[v].insert(u);
    }
    std::vector<bool> placed(pat.graph.n(), false);
    for (int step = 0; step < pat.graph.n(); ++step) {
      int best = -1, best_links = -1, best_deg = -1;
      for (int v = 0; v < pat.graph.n(); ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (int u : pat.graph.neighbors(v))
          if (placed[u]) ++links;
        int deg = pat.graph.degree(v) + (pat.roles[v] != Role::Free ? 1 : 0);
        if (links > best_links || (links == best_links && deg > best_deg)) {
          best = v;
          best_links = links;
          best_deg = deg;
        }
      }
      placed[best] = true;
      order.push_back(best);
    }
  }

  VertexSet domain(int pv) const {
    VertexSet d;
    switch (pat.roles[pv]) {
      case Role::InsideNs:
        d = f.inside - VertexSet::single(f.s);
        break;
      case Role::OutsideNs:
        d = f.base.vertices() - f.inside;
        break;
      case Role::Free:
        d = f.base.vertices() - VertexSet::single(f.s);
        break;
    }
    return d;
  }

  bool extend(size_t depth) {
    if (depth == order.size()) return true;
    int pv = order[depth];
    for (int h : domain(pv) - used) {
      bool ok = f.result.degree(h) >= pat.graph.degree(pv);
      for (size_t d = 0; d < depth && ok; ++d) {
        int q = order[d];
        if (pat.graph.adjacent(pv, q) != f.result.adjacent(h, phi[q])) ok = false;
        else if (annotated_with[pv].contains(q) && !f.base.adjacent(h, phi[q])) ok = false;
      }
      if (!ok) continue;
      phi[pv] = h;
      used.insert(h);
      if (extend(depth + 1)) return true;
      used.erase(h);
      phi[pv] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_annotated_copy(const FlipGraph& f, const AnnotatedPattern& p) {
  // s never takes part, so a pattern needs at most n-1 vertices.
  if (p.graph.n() > f.base.n() - 1) return std::nullopt;
  AnnotatedSearcher s(f, p);
  if (s.extend(0)) return s.phi;
  return std::nullopt;
}

std::optional<ConfigurationHit> has_forbidden_configuration(const FlipGraph& f) {
  if (auto hole = find_hole(f.result)) {
    ConfigurationHit hit;
    hit.family = "hole";
    hit.params = {static_cast<int>(hole->size())};
    hit.phi = *hole;
    return hit;
  }
  for (const AnnotatedPattern& p : pattern_library(std::max(4, f.base.n() - 1))) {
    if (p.family == "hole") continue;  // chordality above covers holes
    if (auto phi = find_annotated_copy(f, p)) {
      ConfigurationHit hit;
      hit.family = p.family;
      hit.params = p.params;
      hit.phi = *phi;
      for (auto [u, v] : p.annotated_edges) hit.annotated_images.emplace_back((*phi)[u], (*phi)[v]);
      return hit;
    }
  }
  return std::nullopt;
}

}  // namespace cag
