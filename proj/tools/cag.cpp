// Batch front end: generators, deciders, enumeration, and arc-model tools,
// speaking graph6 on stdin/stdout with JSON-lines verdicts.

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cag/arcs.hpp"
#include "cag/certificates.hpp"
#include "cag/chordal.hpp"
#include "cag/decide.hpp"
#include "cag/families.hpp"
#include "cag/flip.hpp"
#include "cag/graph.hpp"
#include "cag/patterns.hpp"

using json = nlohmann::json;
using namespace cag;

namespace {

int parse_int(const std::string& text) {
  try {
    size_t used = 0;
    int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw CLI::ValidationError("not an integer: " + text);
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw CLI::ValidationError("bad integer list: " + text);
    out.push_back(parse_int(item));
  }
  return out;
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

struct GenResult {
  LabeledGraph lg;
  std::string family;
  std::vector<int> params;
};

GenResult generate(const std::string& family, const std::vector<std::string>& args) {
  auto need_int = [&](size_t i) {
    if (args.size() <= i) throw CLI::ValidationError("missing parameter for " + family);
    return parse_int(args[i]);
  };
  if (family == "otimes") {
    if (args.empty()) throw CLI::ValidationError("otimes needs a sequence, e.g. 1,1,1,3");
    OtimesSpec spec{parse_int_list(args[0])};
    if (!spec.valid()) throw CLI::ValidationError("invalid otimes sequence");
    return {otimes(spec), "otimes", spec.seq};
  }
  if (family == "gadget") return {gadget(need_int(0)), "gadget", {need_int(0)}};
  if (family == "sun") return {{sun(need_int(0)), {}}, "sun", {need_int(0)}};
  if (family == "sun-complement") return {{sun_complement(need_int(0)), {}}, family, {need_int(0)}};
  if (family == "sun-complement-plus")
    return {{sun_complement_plus(need_int(0)), {}}, family, {need_int(0)}};
  if (family == "long-claw") return {{long_claw(), {}}, family, {}};
  if (family == "whipping-top") return {{whipping_top(), {}}, family, {}};
  if (family == "whipping-top-star") return {{add_isolated_vertex(whipping_top()), {}}, family, {}};
  if (family == "dag") return {{dag_graph(need_int(0)), {}}, family, {need_int(0)}};
  if (family == "ddag") return {{ddag_graph(need_int(0)), {}}, family, {need_int(0)}};
  if (family == "net") return {{net(), {}}, family, {}};
  if (family == "net-star") return {{net_star(), {}}, family, {}};
  if (family.rfind("fig7", 0) == 0 && family.size() == 5 && family[4] >= 'a' && family[4] <= 'f')
    return {fig7_graphs()[family[4] - 'a'], family, {}};
  throw CLI::ValidationError("unknown family: " + family);
}

json labels_json(const LabeledGraph& lg) {
  json j = json::object();
  for (const auto& [key, vec] : lg.labels) j[key] = vec;
  return j;
}

// One verdict line per input graph.
json check_line(const std::string& mode, const Graph& g) {
  json j;
  if (mode == "chordal") {
    auto hole = find_hole(g);
    j["chordal"] = !hole.has_value();
    if (hole) j["certificate"] = certificate_json(HoleCertificate{*hole});
    return j;
  }
  if (mode == "interval") {
    auto v = is_interval(g);
    j["interval"] = v.interval;
    if (v.hole) j["certificate"] = certificate_json(HoleCertificate{*v.hole});
    else if (v.family) j["certificate"] = {{"kind", "non-interval-copy"}, {"family", *v.family}, {"phi", v.phi}};
    return j;
  }
  if (!is_chordal(g)) {
    auto hole = find_hole(g);
    j["error"] = "input graph is not chordal";
    if (hole) j["certificate"] = certificate_json(HoleCertificate{*hole});
    return j;
  }
  CaVerdict v;
  if (mode == "ca-flip") v = is_ca_via_flip(g);
  else if (mode == "ca-family") v = is_ca_via_families(g);
  else if (mode == "hca") v = is_hca_chordal(g);
  else throw CLI::ValidationError("unknown check mode: " + mode);
  j[mode == "hca" ? "hca" : "ca"] = v.ca;
  if (v.certificate) j["certificate"] = certificate_json(*v.certificate);
  return j;
}

int run_check(const std::string& mode, int jobs, int max_n, std::istream& in, std::ostream& out) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  std::vector<std::string> results(lines.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> any_error{false};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= lines.size()) return;
      json j;
      j["line"] = i + 1;
      try {
        Graph g = parse_graph6(lines[i]);
        if (g.n() > max_n) throw std::invalid_argument("graph order exceeds --max-n");
        j["graph"] = lines[i];
        j.update(check_line(mode, g));
      } catch (const std::exception& e) {
        j["error"] = e.what();
        any_error = true;
      }
      results[i] = j.dump();
    }
  };
  int n_threads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& r : results) out << r << "\n";
  return any_error ? 1 : 0;
}

int run_verify(std::istream& in, std::ostream& out) {
  std::string line;
  bool all_ok = true;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++lineno;
    json j, r;
    r["line"] = lineno;
    try {
      j = json::parse(line);
      Graph g = parse_graph6(j.at("graph").get<std::string>());
      if (!j.contains("certificate")) {
        r["ok"] = true;
        r["note"] = "no certificate attached";
      } else {
        auto cert = certificate_from_json(j["certificate"]);
        if (!cert) {
          r["ok"] = false;
          r["why"] = "unparsable certificate";
        } else {
          std::string why;
          bool ok = verify_certificate(g, *cert, &why);
          r["ok"] = ok;
          if (!ok) r["why"] = why;
        }
      }
    } catch (const std::exception& e) {
      r["ok"] = false;
      r["why"] = e.what();
    }
    if (!r["ok"].get<bool>()) all_ok = false;
    out << r.dump() << "\n";
  }
  return all_ok ? 0 : 1;
}

int resolve_role(const LabeledGraph& lg, const std::string& role) {
  if (role == "c") return lg.labels.at("c").at(0);
  if (role.size() >= 2 && (role[0] == 'v' || role[0] == 'w')) {
    int idx = parse_int(role.substr(1));
    const auto& list = lg.labels.at(role[0] == 'v' ? "v.global" : "w.global");
    int at = role[0] == 'v' ? idx - 1 : idx;  // v is 1-based, w 0-based
    if (at < 0 || at >= static_cast<int>(list.size()) || list[at] < 0)
      throw CLI::ValidationError("no such vertex role: " + role);
    return list[at];
  }
  return parse_int(role);
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  if (std::getenv("CAG_TOOLKIT_SEED") != nullptr) {
    // reserved; all algorithms are deterministic
  }

  CLI::App app{"circular-arc recognition toolkit for chordal graphs"};
  app.require_subcommand(1);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "emit a named family member");
  std::string gen_family, gen_format = "graph6";
  std::vector<std::string> gen_args;
  bool gen_labels = false;
  gen->add_option("family", gen_family)->required();
  gen->add_option("params", gen_args);
  gen->add_option("--format", gen_format)->check(CLI::IsMember({"graph6", "dot", "json"}));
  gen->add_flag("--labels", gen_labels, "also print the role labels as JSON");

  // ---- check ----
  auto* check = app.add_subcommand("check", "read graph6 lines, write verdict JSON lines");
  std::string check_mode;
  int check_jobs = 1, check_max_n = kMaxVertices;
  check->add_option("mode", check_mode)
      ->required()
      ->check(CLI::IsMember({"ca-flip", "ca-family", "hca", "interval", "chordal"}));
  check->add_option("--jobs", check_jobs)->check(CLI::PositiveNumber);
  check->add_option("--max-n", check_max_n, "reject input graphs above this order")
      ->check(CLI::PositiveNumber);

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "re-check certificate JSON lines from `check`");

  // ---- enumerate ----
  auto* enumerate = app.add_subcommand("enumerate", "stream graph6 of generated graphs");
  int enum_n = 0;
  std::string enum_filter = "chordal";
  bool families_only = false;
  enumerate->add_option("--n", enum_n)->required();
  enumerate->add_option("--filter", enum_filter)
      ->check(CLI::IsMember({"chordal", "minimal-forbidden"}));
  enumerate->add_flag("--families-only", families_only,
                      "take candidates from the family generators instead of the sweep");

  // ---- flip ----
  auto* flipcmd = app.add_subcommand("flip", "dump the auxiliary graph and its witness data");
  int flip_s = 0;
  flipcmd->add_option("--s", flip_s, "simplicial pivot vertex")->required();

  // ---- region ----
  auto* region = app.add_subcommand("region", "classify recognized minimal forbidden graphs");

  // ---- model ----
  auto* model = app.add_subcommand("model", "arc-model constructions and checks");
  model->require_subcommand(1);
  bool model_verify = false;
  std::string m_seq, m_role, m_fig, m_flipset;
  auto* m_base = model->add_subcommand("base", "model of the flipped arrangement minus c");
  m_base->add_option("seq", m_seq)->required();
  m_base->add_flag("--verify", model_verify);
  auto* m_minus = model->add_subcommand("otimes-minus", "Helly model of the arrangement minus x");
  m_minus->add_option("seq", m_seq)->required();
  m_minus->add_option("role", m_role)->required();
  m_minus->add_flag("--verify", model_verify);
  auto* m_fig1 = model->add_subcommand("fig1", "one of the two fixed sun models");
  m_fig1->add_option("which", m_fig)->required()->check(CLI::IsMember({"b", "c"}));
  auto* m_flip = model->add_subcommand("flip", "flip arcs of a fixed model (1-based ids)");
  m_flip->add_option("which", m_fig)->required()->check(CLI::IsMember({"fig1b", "fig1c"}));
  m_flip->add_option("vertices", m_flipset)->required();
  auto* m_oracle = model->add_subcommand("oracle", "search a realizing model for graph6 input");
  bool oracle_helly = false;
  m_oracle->add_flag("--helly", oracle_helly);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      GenResult r = generate(gen_family, gen_args);
      if (gen_format == "graph6") std::cout << emit_graph6(r.lg.graph) << "\n";
      else if (gen_format == "dot") std::cout << to_dot(r.lg.graph);
      else {
        json j = {{"family", r.family}, {"params", r.params}, {"graph6", emit_graph6(r.lg.graph)}};
        j["labels"] = labels_json(r.lg);
        std::cout << j.dump() << "\n";
      }
      if (gen_labels && gen_format == "graph6") std::cout << labels_json(r.lg).dump() << "\n";
      return 0;
    }

    if (check->parsed()) return run_check(check_mode, check_jobs, check_max_n, std::cin, std::cout);
    if (verify->parsed()) return run_verify(std::cin, std::cout);

    if (enumerate->parsed()) {
      if (enum_filter == "minimal-forbidden" && families_only) {
        for (const auto& m : forbidden_family_upto(enum_n))
          std::cout << emit_graph6(m.labeled.graph) << "\n";
        return 0;
      }
      if (enum_n > 7) throw CLI::ValidationError("exhaustive enumeration is capped at n = 7");
      for (const Graph& g : enumerate_chordal(enum_n)) {
        if (enum_filter == "minimal-forbidden" && !is_minimal_forbidden_ca(g)) continue;
        std::cout << emit_graph6(g) << "\n";
      }
      return 0;
    }

    if (flipcmd->parsed()) {
      std::string line;
      bool any_error = false;
      while (std::getline(std::cin, line)) {
        if (line.empty()) continue;
        json j;
        try {
          Graph g = parse_graph6(line);
          FlipGraph f = flip(g, flip_s);
          j["graph"] = line;
          j["s"] = flip_s;
          j["flip"] = emit_graph6(f.result);
          j["inside"] = f.inside.to_vector();
          json coll = json::array();
          for (auto [u, v] : collateral_edges(f)) {
            VertexSet w = witnesses(f, VertexSet::of({u, v}));
            // Designated witness: least simplicial one when any witness is
            // simplicial in G, else the least witness.
            int designated = -1;
            for (int x : w)
              if (g.is_simplicial(x)) {
                designated = x;
                break;
              }
            if (designated < 0 && !w.empty()) designated = w.min();
            json e = {{"edge", {u, v}},
                      {"witnesses", w.to_vector()},
                      {"designated", designated}};
            coll.push_back(e);
          }
          j["collateral"] = coll;
        } catch (const std::exception& e) {
          j["error"] = e.what();
          any_error = true;
        }
        std::cout << j.dump() << "\n";
      }
      return any_error ? 1 : 0;
    }

    if (region->parsed()) {
      std::string line;
      bool any_error = false;
      while (std::getline(std::cin, line)) {
        if (line.empty()) continue;
        json j;
        try {
          Graph g = parse_graph6(line);
          j["graph"] = line;
          j["region"] = classify_region(g);
        } catch (const std::exception& e) {
          j["error"] = e.what();
          any_error = true;
        }
        std::cout << j.dump() << "\n";
      }
      return any_error ? 1 : 0;
    }

    if (model->parsed()) {
      auto emit_model = [&](const ArcModel& m, const Graph* target) {
        json j = model_json(m);
        if (model_verify && target) {
          j["realizes"] = realizes(m, *target);
          j["helly"] = is_helly(m).helly;
        }
        std::cout << j.dump() << "\n";
      };
      if (m_base->parsed()) {
        OtimesSpec spec{parse_int_list(m_seq)};
        ArcModel m = base_model_otimes(spec);
        FlipGraph f = flip(otimes(spec).graph, 0);
        auto [target, map] = induced_subgraph(f.result, f.result.vertices() - VertexSet::single(0));
        emit_model(m, &target);
        return 0;
      }
      if (m_minus->parsed()) {
        OtimesSpec spec{parse_int_list(m_seq)};
        LabeledGraph lg = otimes(spec);
        int x = resolve_role(lg, m_role);
        ArcModel m = model_otimes_minus(spec, x);
        Graph target = remove_vertex(lg.graph, x);
        emit_model(m, &target);
        return 0;
      }
      if (m_fig1->parsed()) {
        emit_model(m_fig == "b" ? fig1b_model() : fig1c_model(), nullptr);
        return 0;
      }
      if (m_flip->parsed()) {
        ArcModel base = (m_fig == "fig1b") ? fig1b_model() : fig1c_model();
        VertexSet s;
        for (int v : parse_int_list(m_flipset)) s.insert(v - 1);  // drawing ids are 1-based
        ArcModel flipped = flip_arcs(base, s);
        json j = model_json(flipped);
        j["intersection_graph6"] = emit_graph6(intersection_graph(flipped));
        std::cout << j.dump() << "\n";
        return 0;
      }
      if (m_oracle->parsed()) {
        std::string line;
        bool any_error = false;
        while (std::getline(std::cin, line)) {
          if (line.empty()) continue;
          json j;
          try {
            Graph g = parse_graph6(line);
            auto m = oracle_helly ? hca_oracle(g) : ca_oracle(g);
            j["graph"] = line;
            if (m) {
              j["model"] = model_json(*m);
              j["realizes"] = realizes(*m, g);
              if (oracle_helly) j["helly"] = is_helly(*m).helly;
            } else {
              j["model"] = nullptr;
            }
          } catch (const std::exception& e) {
            j["error"] = e.what();
            any_error = true;
          }
          std::cout << j.dump() << "\n";
        }
        return any_error ? 1 : 0;
      }
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
