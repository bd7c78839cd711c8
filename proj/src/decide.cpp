#include "cag/decide.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "cag/chordal.hpp"
#include "cag/families.hpp"
#include "cag/flip.hpp"
#include "cag/patterns.hpp"
#include "cag/subiso.hpp"

namespace cag {
namespace {

void require_chordal(const Graph& g, const char* who) {
  if (!is_chordal(g)) throw std::invalid_argument(std::string(who) + ": input is not chordal");
}

// Same-order members are matched by canonical form, smaller ones by search.
std::optional<std::vector<int>> copy_of(const Graph& host, const Graph& member) {
  if (member.n() == host.n()) return is_isomorphic(member, host);
  return find_induced_copy(host, member);
}

}  // namespace

CaVerdict is_ca_via_flip(const Graph& g) {
  require_chordal(g, "is_ca_via_flip");
  auto [core, keep] = strip_universal(g);
  if (core.n() == 0) return {true, std::nullopt};
  int s = simplicial_vertices(core).min();
  FlipGraph f = flip(core, s);
  auto hit = has_forbidden_configuration(f);
  if (!hit) return {true, std::nullopt};
  AnnotatedCopyCertificate cert;
  cert.family = hit->family;
  cert.params = hit->params;
  cert.s = keep[s];
  for (int v : hit->phi) cert.phi.push_back(keep[v]);
  for (auto [u, v] : hit->annotated_images) cert.annotated_edges.emplace_back(keep[u], keep[v]);
  return {false, cert};
}

CaVerdict is_ca_via_families(const Graph& g) {
  require_chordal(g, "is_ca_via_families");
  for (const FamilyMember& m : forbidden_family_upto(g.n()))
    if (auto phi = copy_of(g, m.labeled.graph))
      return {false, InducedCopyCertificate{m.family, m.params, *phi}};
  return {true, std::nullopt};
}

CaVerdict is_hca_chordal(const Graph& g) {
  require_chordal(g, "is_hca_chordal");
  struct Entry {
    std::string family;
    std::vector<int> params;
    Graph graph;
  };
  std::vector<Entry> list;
  for (int k = 3; 2 * k <= g.n(); ++k) list.push_back({"sun-complement", {k}, sun_complement(k)});
  if (g.n() >= 7) list.push_back({"long-claw", {}, long_claw()});
  if (g.n() >= 8) list.push_back({"whipping-top-star", {}, add_isolated_vertex(whipping_top())});
  auto fig7 = fig7_graphs();
  const int picks[] = {2, 3, 5};  // (c), (d), (f)
  const char* names[] = {"fig7c", "fig7d", "fig7f"};
  for (int i = 0; i < 3; ++i)
    if (fig7[picks[i]].graph.n() <= g.n()) list.push_back({names[i], {}, fig7[picks[i]].graph});
  for (const OtimesSpec& s : otimes_specs_upto(g.n()))
    list.push_back({"otimes", s.seq, otimes(s).graph});
  std::stable_sort(list.begin(), list.end(),
                   [](const Entry& a, const Entry& b) { return a.graph.n() < b.graph.n(); });
  for (const Entry& e : list)
    if (auto phi = copy_of(g, e.graph))
      return {false, InducedCopyCertificate{e.family, e.params, *phi}};
  return {true, std::nullopt};
}

bool is_minimal_forbidden_ca(const Graph& g) {
  require_chordal(g, "is_minimal_forbidden_ca");
  if (is_ca_via_families(g).ca) return false;
  for (int v = 0; v < g.n(); ++v)
    if (!is_ca_via_families(remove_vertex(g, v)).ca) return false;
  return true;
}

std::vector<Graph> enumerate_chordal(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("enumerate_chordal: supported for 1 <= n <= 7");
  std::vector<Graph> classes;
  std::unordered_set<std::string> seen;
  auto admit = [&](const Graph& g) {
    std::string canon = canonical_form(g);
    if (seen.insert(canon).second) classes.push_back(relabel(g, canonical_labeling(g)));
  };
  if (n <= 6) {
    int bits = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      Graph g(n);
      for (int b = 0; b < bits; ++b)
        if (mask >> b & 1) g.add_edge(slots[b].first, slots[b].second);
      if (is_chordal(g)) admit(g);
    }
  } else {
    // Every chordal graph has a simplicial vertex, so gluing one onto each
    // clique of each smaller class is a complete generator.
    for (const Graph& g : enumerate_chordal(n - 1)) {
      std::vector<VertexSet> cliques;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n()); ++mask) {
        VertexSet s(mask);
        if (g.is_clique(s)) cliques.push_back(s);
      }
      for (VertexSet s : cliques) {
        Graph h = add_isolated_vertex(g);
        for (int v : s) h.add_edge(g.n(), v);
        admit(h);
      }
    }
  }
  std::sort(classes.begin(), classes.end(), [](const Graph& a, const Graph& b) {
    if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
    return canonical_form(a) < canonical_form(b);
  });
  return classes;
}

bool is_split(const Graph& g) { return is_chordal(g) && is_chordal(complement(g)); }

int classify_region(const Graph& g) {
  for (int k = 3; 2 * k <= g.n(); ++k)
    if (g.n() == 2 * k && is_isomorphic(g, sun_complement(k))) return 1;
  bool recognized = false;
  for (const FamilyMember& m : forbidden_family_upto(g.n()))
    if (m.labeled.graph.n() == g.n() && is_isomorphic(m.labeled.graph, g)) {
      recognized = true;
      break;
    }
  if (!recognized) throw std::invalid_argument("classify_region: not a recognized minimal forbidden graph");
  bool contains_sun_complement = false;
  for (int k = 3; 2 * k <= g.n() && !contains_sun_complement; ++k)
    if (copy_of(g, sun_complement(k))) contains_sun_complement = true;
  if (is_split(g)) return contains_sun_complement ? 3 : 2;
  return contains_sun_complement ? 5 : 4;
}

}  // namespace cag
