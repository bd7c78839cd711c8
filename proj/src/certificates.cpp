#include "cag/certificates.hpp"

#include "cag/chordal.hpp"
#include "cag/families.hpp"
#include "cag/flip.hpp"

namespace cag {

using nlohmann::json;

json model_json(const ArcModel& m) {
  json arcs = json::array();
  for (size_t v = 0; v < m.arcs.size(); ++v) {
    if (m.arcs[v].full)
      arcs.push_back({{"v", v}, {"full", true}});
    else
      arcs.push_back({{"v", v}, {"lp", m.arcs[v].lp}, {"rp", m.arcs[v].rp}});
  }
  return {{"circle_len", m.circle_len}, {"arcs", arcs}};
}

std::optional<ArcModel> model_from_json(const json& j) {
  if (!j.is_object() || !j.contains("circle_len") || !j.contains("arcs")) return std::nullopt;
  ArcModel m;
  m.circle_len = j["circle_len"].get<int>();
  if (m.circle_len <= 0) return std::nullopt;
  m.arcs.resize(j["arcs"].size());
  for (const auto& a : j["arcs"]) {
    int v = a.at("v").get<int>();
    if (v < 0 || v >= static_cast<int>(m.arcs.size())) return std::nullopt;
    if (a.contains("full") && a["full"].get<bool>()) {
      m.arcs[v].full = true;
    } else {
      m.arcs[v].lp = a.at("lp").get<int>();
      m.arcs[v].rp = a.at("rp").get<int>();
      if (m.arcs[v].lp < 0 || m.arcs[v].lp >= m.circle_len || m.arcs[v].rp < 0 ||
          m.arcs[v].rp >= m.circle_len)
        return std::nullopt;
    }
  }
  return m;
}

json certificate_json(const Certificate& cert) {
  json j;
  if (const auto* hole = std::get_if<HoleCertificate>(&cert)) {
    j["kind"] = "hole";
    j["cycle"] = hole->cycle;
  } else if (const auto* copy = std::get_if<InducedCopyCertificate>(&cert)) {
    j["kind"] = "induced-copy";
    j["family"] = copy->family;
    j["params"] = copy->params;
    j["phi"] = copy->phi;
  } else if (const auto* ann = std::get_if<AnnotatedCopyCertificate>(&cert)) {
    j["kind"] = "annotated-copy";
    j["family"] = ann->family;
    j["params"] = ann->params;
    j["s"] = ann->s;
    j["phi"] = ann->phi;
    json edges = json::array();
    for (auto [u, v] : ann->annotated_edges) edges.push_back({u, v});
    j["annotated_edge_images"] = edges;
  } else if (const auto* m = std::get_if<ArcModel>(&cert)) {
    j = model_json(*m);
    j["kind"] = "arc-model";
  }
  return j;
}

std::optional<Certificate> certificate_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) return std::nullopt;
  std::string kind = j["kind"].get<std::string>();
  try {
    if (kind == "hole") {
      HoleCertificate c;
      c.cycle = j.at("cycle").get<std::vector<int>>();
      return c;
    }
    if (kind == "induced-copy") {
      InducedCopyCertificate c;
      c.family = j.at("family").get<std::string>();
      c.params = j.at("params").get<std::vector<int>>();
      c.phi = j.at("phi").get<std::vector<int>>();
      return c;
    }
    if (kind == "annotated-copy") {
      AnnotatedCopyCertificate c;
      c.family = j.at("family").get<std::string>();
      c.params = j.at("params").get<std::vector<int>>();
      c.s = j.at("s").get<int>();
      c.phi = j.at("phi").get<std::vector<int>>();
      for (const auto& e : j.at("annotated_edge_images"))
        c.annotated_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      return c;
    }
    if (kind == "arc-model") return model_from_json(j);
  } catch (const json::exception&) {
    return std::nullopt;
  }
  return std::nullopt;
}

namespace {

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

bool check_injective_vertices(const Graph& g, const std::vector<int>& vs, std::string* why) {
  VertexSet seen;
  for (int v : vs) {
    if (!g.has_vertex(v)) return fail(why, "vertex out of range");
    if (seen.contains(v)) return fail(why, "vertex repeated");
    seen.insert(v);
  }
  return true;
}

}  // namespace

bool verify_certificate(const Graph& g, const Certificate& cert, std::string* why) {
  if (const auto* hole = std::get_if<HoleCertificate>(&cert)) {
    const auto& c = hole->cycle;
    if (c.size() < 4) return fail(why, "hole shorter than four");
    if (!check_injective_vertices(g, c, why)) return false;
    int k = static_cast<int>(c.size());
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        bool onring = (j == i + 1) || (i == 0 && j == k - 1);
        if (g.adjacent(c[i], c[j]) != onring)
          return fail(why, onring ? "missing cycle edge" : "chord present");
      }
    return true;
  }
  if (const auto* copy = std::get_if<InducedCopyCertificate>(&cert)) {
    auto pattern = family_by_name(copy->family, copy->params);
    if (!pattern) return fail(why, "unknown family");
    if (static_cast<int>(copy->phi.size()) != pattern->n()) return fail(why, "phi size mismatch");
    if (!check_injective_vertices(g, copy->phi, why)) return false;
    for (int u = 0; u < pattern->n(); ++u)
      for (int v = u + 1; v < pattern->n(); ++v)
        if (pattern->adjacent(u, v) != g.adjacent(copy->phi[u], copy->phi[v]))
          return fail(why, "not an induced copy");
    return true;
  }
  if (const auto* ann = std::get_if<AnnotatedCopyCertificate>(&cert)) {
    if (!g.has_vertex(ann->s)) return fail(why, "s out of range");
    if (!g.is_simplicial(ann->s)) return fail(why, "s not simplicial");
    auto pattern = pattern_by_name(ann->family, ann->params);
    if (!pattern) return fail(why, "unknown configuration");
    if (static_cast<int>(ann->phi.size()) != pattern->graph.n())
      return fail(why, "phi size mismatch");
    if (!check_injective_vertices(g, ann->phi, why)) return false;
    FlipGraph f = flip(g, ann->s);
    for (int v = 0; v < pattern->graph.n(); ++v) {
      int h = ann->phi[v];
      if (h == ann->s) return fail(why, "s inside the configuration");
      if (pattern->roles[v] == Role::InsideNs && !(f.inside.contains(h) && h != ann->s))
        return fail(why, "role violated: expected a neighbour of s");
      if (pattern->roles[v] == Role::OutsideNs && f.inside.contains(h))
        return fail(why, "role violated: expected outside N[s]");
    }
    for (int u = 0; u < pattern->graph.n(); ++u)
      for (int v = u + 1; v < pattern->graph.n(); ++v)
        if (pattern->graph.adjacent(u, v) != f.result.adjacent(ann->phi[u], ann->phi[v]))
          return fail(why, "not induced in the flipped graph");
    for (auto [u, v] : pattern->annotated_edges)
      if (!g.adjacent(ann->phi[u], ann->phi[v])) return fail(why, "annotated edge missing in G");
    std::vector<std::pair<int, int>> expect;
    for (auto [u, v] : pattern->annotated_edges) expect.emplace_back(ann->phi[u], ann->phi[v]);
    if (expect != ann->annotated_edges) return fail(why, "annotated edge list mismatch");
    return true;
  }
  if (const auto* m = std::get_if<ArcModel>(&cert)) {
    if (static_cast<int>(m->arcs.size()) != g.n()) return fail(why, "model size mismatch");
    if (!realizes(*m, g)) return fail(why, "model does not realize the graph");
    return true;
  }
  return fail(why, "unknown certificate kind");
}

}  // namespace cag
