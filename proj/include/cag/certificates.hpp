#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cag/arcs.hpp"
#include "cag/graph.hpp"
#include "cag/patterns.hpp"

namespace cag {

struct HoleCertificate {
  std::vector<int> cycle;
};

/// Induced copy of a named family member: phi[i] is the host vertex carrying
/// pattern vertex i of family_by_name(family, params).
struct InducedCopyCertificate {
  std::string family;
  std::vector<int> params;
  std::vector<int> phi;
};

/// Annotated copy of a forbidden configuration inside G^s.
struct AnnotatedCopyCertificate {
  std::string family;
  std::vector<int> params;
  int s = -1;
  std::vector<int> phi;
  std::vector<std::pair<int, int>> annotated_edges;  // images, must be edges of G
};

using Certificate =
    std::variant<HoleCertificate, InducedCopyCertificate, AnnotatedCopyCertificate, ArcModel>;

nlohmann::json certificate_json(const Certificate& cert);
std::optional<Certificate> certificate_from_json(const nlohmann::json& j);

nlohmann::json model_json(const ArcModel& m);
std::optional<ArcModel> model_from_json(const nlohmann::json& j);

/// Re-check a certificate against the graph from scratch (independent of the
/// decision procedure that produced it).  On failure, why names the defect.
bool verify_certificate(const Graph& g, const Certificate& cert, std::string* why = nullptr);

}  // namespace cag
