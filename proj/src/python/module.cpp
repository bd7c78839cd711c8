#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "cag/arcs.hpp"
#include "cag/certificates.hpp"
#include "cag/chordal.hpp"
#include "cag/decide.hpp"
#include "cag/families.hpp"
#include "cag/flip.hpp"
#include "cag/graph.hpp"
#include "cag/patterns.hpp"
#include "cag/subiso.hpp"

namespace py = pybind11;
using namespace cag;

namespace {

std::vector<std::vector<int>> sets_to_lists(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<int>> out;
  for (VertexSet s : sets) out.push_back(s.to_vector());
  return out;
}

py::dict verdict_to_dict(const CaVerdict& v) {
  py::dict d;
  d["ca"] = v.ca;
  if (v.certificate) d["certificate"] = certificate_json(*v.certificate).dump();
  else d["certificate"] = py::none();
  return d;
}

py::dict labeled_to_dict(const LabeledGraph& lg) {
  py::dict d;
  d["graph"] = lg.graph;
  py::dict labels;
  for (const auto& [k, v] : lg.labels) labels[py::str(k)] = v;
  d["labels"] = labels;
  return d;
}

}  // namespace

PYBIND11_MODULE(_cag, m) {
  m.doc() = "circular-arc recognition toolkit for chordal graphs";

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             return make_graph(n, edges);
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("n", &Graph::n)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).to_vector(); })
      .def("graph6", [](const Graph& g) { return emit_graph6(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) + ", graph6='" + emit_graph6(g) + "')";
      });

  m.def("from_graph6", &parse_graph6);
  m.def("complement", &complement);
  m.def("add_isolated_vertex", &add_isolated_vertex);
  m.def("remove_vertex", &remove_vertex);
  m.def("induced_subgraph", [](const Graph& g, const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return induced_subgraph(g, s);
  });
  m.def("is_isomorphic", &is_isomorphic);
  m.def("canonical_form", [](const Graph& g) { return py::bytes(canonical_form(g)); });
  m.def("find_induced_copy", [](const Graph& host, const Graph& pattern) {
    return find_induced_copy(host, pattern);
  });

  m.def("is_chordal", &is_chordal);
  m.def("find_hole", &find_hole);
  m.def("simplicial_vertices", [](const Graph& g) { return simplicial_vertices(g).to_vector(); });
  m.def("maximal_cliques", [](const Graph& g) { return sets_to_lists(maximal_cliques(g)); });
  m.def("is_interval", [](const Graph& g) {
    auto v = is_interval(g);
    py::dict d;
    d["interval"] = v.interval;
    d["hole"] = v.hole ? py::cast(*v.hole) : py::none();
    d["family"] = v.family ? py::cast(*v.family) : py::none();
    d["phi"] = v.phi;
    return d;
  });

  py::class_<FlipGraph>(m, "FlipGraph")
      .def_readonly("base", &FlipGraph::base)
      .def_readonly("s", &FlipGraph::s)
      .def_readonly("result", &FlipGraph::result)
      .def_property_readonly("inside", [](const FlipGraph& f) { return f.inside.to_vector(); })
      .def("collateral_edges", [](const FlipGraph& f) { return collateral_edges(f); })
      .def("witnesses", [](const FlipGraph& f, const std::vector<int>& k) {
        VertexSet s;
        for (int v : k) s.insert(v);
        return witnesses(f, s).to_vector();
      });
  m.def("flip", &flip);
  m.def("strip_universal", &strip_universal);
  m.def("has_forbidden_configuration", [](const Graph& g, int s) -> py::object {
    auto hit = has_forbidden_configuration(flip(g, s));
    if (!hit) return py::none();
    py::dict d;
    d["family"] = hit->family;
    d["params"] = hit->params;
    d["phi"] = hit->phi;
    d["annotated_edge_images"] = hit->annotated_images;
    return d;
  });

  m.def("gadget", [](int k) { return labeled_to_dict(gadget(k)); });
  m.def("otimes", [](const std::vector<int>& seq) { return labeled_to_dict(otimes(OtimesSpec{seq})); });
  m.def("otimes_normalize",
        [](const std::vector<int>& seq) { return otimes_normalize(OtimesSpec{seq}).seq; });
  m.def("otimes_order", [](const std::vector<int>& seq) { return OtimesSpec{seq}.order(); });
  m.def("otimes_proper", [](const std::vector<int>& seq) { return OtimesSpec{seq}.proper(); });
  m.def("sun", &sun);
  m.def("sun_complement", &sun_complement);
  m.def("sun_complement_plus", &sun_complement_plus);
  m.def("long_claw", &long_claw);
  m.def("whipping_top", &whipping_top);
  m.def("dag_graph", &dag_graph);
  m.def("ddag_graph", &ddag_graph);
  m.def("net", &net);
  m.def("net_star", &net_star);
  m.def("fig7_graphs", [] {
    std::vector<py::dict> out;
    for (const auto& lg : fig7_graphs()) out.push_back(labeled_to_dict(lg));
    return out;
  });
  m.def("forbidden_family_upto", [](int n) {
    std::vector<py::dict> out;
    for (const auto& mem : forbidden_family_upto(n)) {
      py::dict d;
      d["family"] = mem.family;
      d["params"] = mem.params;
      d["graph"] = mem.labeled.graph;
      out.push_back(d);
    }
    return out;
  });
  m.def("family_by_name", &family_by_name);

  m.def("is_ca_via_flip", [](const Graph& g) { return verdict_to_dict(is_ca_via_flip(g)); });
  m.def("is_ca_via_families", [](const Graph& g) { return verdict_to_dict(is_ca_via_families(g)); });
  m.def("is_hca_chordal", [](const Graph& g) { return verdict_to_dict(is_hca_chordal(g)); });
  m.def("is_minimal_forbidden_ca", &is_minimal_forbidden_ca);
  m.def("enumerate_chordal", &enumerate_chordal);
  m.def("is_split", &is_split);
  m.def("classify_region", &classify_region);
  m.def("verify_certificate_json", [](const Graph& g, const std::string& cert_json) {
    auto cert = certificate_from_json(nlohmann::json::parse(cert_json));
    if (!cert) return std::make_pair(false, std::string("unparsable certificate"));
    std::string why;
    bool ok = verify_certificate(g, *cert, &why);
    return std::make_pair(ok, why);
  });

  py::class_<ArcModel>(m, "ArcModel")
      .def(py::init([](int circle_len, const std::vector<std::tuple<int, int>>& arcs) {
             ArcModel m;
             m.circle_len = circle_len;
             for (auto [lp, rp] : arcs) m.arcs.push_back({lp, rp, false});
             return m;
           }),
           py::arg("circle_len"), py::arg("arcs"))
      .def_readonly("circle_len", &ArcModel::circle_len)
      .def_property_readonly("arcs", [](const ArcModel& m) {
        std::vector<py::object> out;
        for (const Arc& a : m.arcs) {
          if (a.full) out.push_back(py::none());
          else out.push_back(py::make_tuple(a.lp, a.rp));
        }
        return out;
      })
      .def("json", [](const ArcModel& m) { return model_json(m).dump(); });
  m.def("intersection_graph", &intersection_graph);
  m.def("realizes", &realizes);
  m.def("is_helly", [](const ArcModel& m) {
    auto v = is_helly(m);
    return std::make_pair(v.helly, v.violating_clique.to_vector());
  });
  m.def("flip_arcs", [](const ArcModel& m, const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return flip_arcs(m, s);
  });
  m.def("fig1b_model", &fig1b_model);
  m.def("fig1c_model", &fig1c_model);
  m.def("base_model_otimes",
        [](const std::vector<int>& seq) { return base_model_otimes(OtimesSpec{seq}); });
  m.def("model_otimes_minus",
        [](const std::vector<int>& seq, int x) { return model_otimes_minus(OtimesSpec{seq}, x); });
  m.def("ca_oracle", &ca_oracle);
  m.def("hca_oracle", &hca_oracle);
  m.def("interval_oracle", &interval_oracle);
}
