#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "monadic/algebras.hpp"
#include "monadic/frames.hpp"

namespace monadic {

using Json = nlohmann::json;
using Edge = std::pair<std::string, std::string>;

/// Builds an MS4-frame from named points. With close set, R is replaced by its
/// reflexive-transitive closure. Points missing from e_classes form singleton
/// classes. Throws std::invalid_argument for unknown or repeated points.
Ms4Frame build_ms4_frame(const std::vector<std::string>& points, const std::vector<Edge>& r_edges,
                         bool close, const std::vector<std::vector<std::string>>& e_classes);
MipcFrame build_mipc_frame(const std::vector<std::string>& points, const std::vector<Edge>& r_edges,
                           bool close_r, const std::vector<Edge>& q_edges, bool close_q);

using AnyFrame = std::variant<Ms4Frame, MipcFrame>;
using AnyAlgebra = std::variant<FiniteMha, FiniteMs4Algebra>;

/// {"kind":"ms4"|"mipc","points":[...],"r_edges":[[p,q],...],"r_closure":...,
///  "e_classes":[[...]]} or "q_edges"/"q_closure" for mipc.
AnyFrame frame_from_json(const Json& j);
Json frame_to_json(const Ms4Frame& f);
Json frame_to_json(const MipcFrame& f);

/// {"kind":"mha"|"ms4","n":...,"meet":[[...]],...}; tables are normalized on load.
AnyAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const FiniteMha& a);
Json algebra_to_json(const FiniteMs4Algebra& b);

Json report_to_json(const ValidationReport& r);

/// R as solid Hasse arrows (mutual pairs double-headed), E (resp. E_Q) classes
/// of more than one point as boxed clusters.
std::string render_dot(const Ms4Frame& f, const std::string& name = "frame");
std::string render_dot(const MipcFrame& f, const std::string& name = "frame");

Json read_json_file(const std::string& path);

}  // namespace monadic
