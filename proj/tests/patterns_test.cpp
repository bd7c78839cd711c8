#include <doctest.h>

#include <map>

#include "cag/chordal.hpp"
#include "cag/decide.hpp"
#include "cag/families.hpp"
#include "cag/flip.hpp"
#include "cag/graph.hpp"
#include "cag/patterns.hpp"
#include "test_support.hpp"

using namespace cag;
using namespace cag::testing;

namespace {

// Brute-force role-respecting embedder, independent of the production
// matcher: plain index-order recursion over all injections.
std::optional<std::vector<int>> naive_annotated_copy(const FlipGraph& f, const AnnotatedPattern& p) {
  std::vector<VertexSet> allowed(p.graph.n());
  for (int v = 0; v < p.graph.n(); ++v) {
    switch (p.roles[v]) {
      case Role::InsideNs:
        allowed[v] = f.inside - VertexSet::single(f.s);
        break;
      case Role::OutsideNs:
        allowed[v] = f.base.vertices() - f.inside;
        break;
      case Role::Free:
        allowed[v] = f.base.vertices() - VertexSet::single(f.s);
        break;
    }
  }
  NaiveEmbedder e{f.result, p.graph, &allowed, &f.base, &p.annotated_edges};
  return e.run();
}

}  // namespace

TEST_CASE("library composition at small sizes") {
  auto lib4 = pattern_library(4);
  REQUIRE(lib4.size() == 2);
  CHECK(lib4[0].family == "hole");
  CHECK(lib4[1].family == "fig10a");
  CHECK(lib4[1].annotated_edges.size() == 3);
  CHECK(lib4[1].roles[0] == Role::InsideNs);
  for (int v : {1, 2, 3}) CHECK(lib4[1].roles[v] == Role::OutsideNs);
  CHECK_THROWS_AS(pattern_library(3), std::invalid_argument);
}

TEST_CASE("fixture counts per configuration") {
  // vertices, edges, squares, rhombi, annotated edges
  std::map<std::string, std::array<int, 5>> expect = {
      {"fig10a", {4, 3, 1, 3, 3}},  {"fig10b", {5, 7, 2, 3, 3}},  {"fig10c", {6, 12, 3, 3, 3}},
      {"fig10d", {5, 4, 1, 3, 2}},  {"fig10e", {6, 9, 2, 3, 2}},  {"fig10f", {6, 8, 2, 3, 2}},
      {"fig10g", {6, 7, 2, 2, 2}},  {"fig10h", {6, 5, 1, 3, 1}},  {"fig10i", {6, 9, 1, 1, 1}},
      {"fig10j", {6, 8, 1, 2, 2}},  {"fig10k", {7, 11, 1, 3, 1}}, {"fig10l", {6, 8, 1, 2, 1}}};
  for (const AnnotatedPattern& p : pattern_library(7)) {
    auto it = expect.find(p.family);
    if (it == expect.end()) continue;
    auto [n, e, sq, rh, ann] = it->second;
    CHECK(p.graph.n() == n);
    CHECK(p.graph.edge_count() == e);
    int squares = 0, rhombi = 0;
    for (Role r : p.roles) {
      squares += r == Role::InsideNs;
      rhombi += r == Role::OutsideNs;
    }
    CHECK(squares == sq);
    CHECK(rhombi == rh);
    CHECK(static_cast<int>(p.annotated_edges.size()) == ann);
    expect.erase(it);
  }
  CHECK(expect.empty());

  // Annotated edges always join a square node to a rhombus node.
  for (const AnnotatedPattern& p : pattern_library(12))
    for (auto [u, v] : p.annotated_edges) {
      Role a = p.roles[u], b = p.roles[v];
      if (a == Role::OutsideNs) std::swap(a, b);
      CHECK(a == Role::InsideNs);
      CHECK(b == Role::OutsideNs);
    }
}

TEST_CASE("growing families") {
  auto lib = pattern_library(12);
  std::map<std::string, int> count;
  for (const auto& p : lib) count[p.family.substr(0, 6)]++;
  CHECK(count["fig10m"] == 8);  // p = 1..8
  CHECK(count["fig10n"] == 7);  // p = 2..8
  CHECK(count["fig10o"] == 7);  // p = 1..7
  CHECK(count["fig10p"] == 7);

  // Shapes: the m family is a dominated path with a pendant.
  auto m3 = pattern_by_name("fig10m", {3});
  REQUIRE(m3.has_value());
  CHECK(m3->graph.n() == 7);
  CHECK(m3->graph.degree(0) == 6);  // hub sees pendant and the whole path

  auto o2 = pattern_by_name("fig10o", {2});
  REQUIRE(o2.has_value());
  CHECK(o2->graph.n() == 7);
  CHECK(!pattern_by_name("fig10z", {}).has_value());
}

TEST_CASE("claw configuration embeds in the long-claw flip") {
  // G: s-v, v-u1..u3, u_i-w_i; the claw with its witnesses.
  Graph g(8);
  g.add_edge(0, 1);  // s=0, v=1
  for (int i = 0; i < 3; ++i) {
    g.add_edge(1, 2 + i);
    g.add_edge(2 + i, 5 + i);
  }
  REQUIRE(g.is_simplicial(0));
  FlipGraph f = flip(g, 0);
  auto claw = pattern_by_name("fig10a", {});
  auto phi = find_annotated_copy(f, *claw);
  REQUIRE(phi.has_value());
  CHECK((*phi)[0] == 1);
  auto naive = naive_annotated_copy(f, *claw);
  CHECK(naive.has_value());
}

TEST_CASE("no configuration in the flipped path") {
  Graph p4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  FlipGraph f = flip(p4, 0);
  for (const AnnotatedPattern& p : pattern_library(4)) {
    CHECK(!find_annotated_copy(f, p).has_value());
    CHECK(!naive_annotated_copy(f, p).has_value());
  }
  CHECK(!has_forbidden_configuration(f).has_value());
}

TEST_CASE("hole fast path on the flipped arrangement graph") {
  LabeledGraph lg = otimes(OtimesSpec{{1, 1, 1, 3}});
  FlipGraph f = flip(lg.graph, 0);
  auto hit = has_forbidden_configuration(f);
  REQUIRE(hit.has_value());
  CHECK(hit->family == "hole");
  CHECK(hit->params == std::vector<int>{6});
}

TEST_CASE("augmented sun complement is caught") {
  Graph g = sun_complement_plus(3);
  bool some = false;
  for (int s : simplicial_vertices(g)) {
    auto hit = has_forbidden_configuration(flip(g, s));
    if (hit) some = true;
  }
  CHECK(some);
}

TEST_CASE("no configuration after flipping an interval graph") {
  // interval graph with a simplicial vertex: a path
  Graph p6 = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(!has_forbidden_configuration(flip(p6, 0)).has_value());
}

TEST_CASE("matcher equals the naive embedder") {
  // On every simplicial pivot of a mixed corpus, for all patterns that fit:
  // the named families plus the full enumerated chordal corpus to n = 6.
  std::vector<Graph> corpus = {net(),
                               net_star(),
                               long_claw(),
                               whipping_top(),
                               sun_complement_plus(3),
                               otimes(OtimesSpec{{1, 3}}).graph,
                               otimes(OtimesSpec{{2, 1}}).graph,
                               fig7_graphs()[4].graph,
                               make_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 5}, {6, 2}})};
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_chordal(n)) corpus.push_back(g);
  for (const Graph& g : corpus) {
    bool universal_free = true;
    for (int v = 0; v < g.n(); ++v) universal_free &= !g.is_universal(v);
    if (!universal_free || !is_chordal(g)) continue;
    for (int s : simplicial_vertices(g)) {
      FlipGraph f = flip(g, s);
      for (const AnnotatedPattern& p : pattern_library(std::max(4, g.n() - 1)))
        CHECK(find_annotated_copy(f, p).has_value() == naive_annotated_copy(f, p).has_value());
    }
  }
}

TEST_CASE("returned embeddings verify") {
  for (const Graph& g : {sun_complement_plus(3), otimes(OtimesSpec{{2, 1}}).graph, net_star()}) {
    for (int s : simplicial_vertices(g)) {
      FlipGraph f = flip(g, s);
      auto hit = has_forbidden_configuration(f);
      if (!hit) continue;
      if (hit->family == "hole") {
        // induced cycle in the flipped graph
        int k = static_cast<int>(hit->phi.size());
        for (int i = 0; i < k; ++i)
          for (int j = i + 1; j < k; ++j) {
            bool onring = (j == i + 1) || (i == 0 && j == k - 1);
            CHECK(f.result.adjacent(hit->phi[i], hit->phi[j]) == onring);
          }
        continue;
      }
      auto p = pattern_by_name(hit->family, hit->params);
      REQUIRE(p.has_value());
      for (int u = 0; u < p->graph.n(); ++u) {
        CHECK(hit->phi[u] != s);
        if (p->roles[u] == Role::InsideNs) CHECK((f.inside.contains(hit->phi[u]) && hit->phi[u] != s));
        if (p->roles[u] == Role::OutsideNs) CHECK(!f.inside.contains(hit->phi[u]));
        for (int v = u + 1; v < p->graph.n(); ++v)
          CHECK(p->graph.adjacent(u, v) == f.result.adjacent(hit->phi[u], hit->phi[v]));
      }
      for (auto [u, v] : hit->annotated_images) CHECK(f.base.adjacent(u, v));
    }
  }
}
