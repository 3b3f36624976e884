#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "newtres/measure.hpp"
#include "newtres/oracle.hpp"
#include "newtres/ridge.hpp"
#include "newtres/solver2d.hpp"

namespace newtres {

inline constexpr const char* kToolVersion = "0.1.0";

/// Common result wrapper: command echo, inputs, tolerances, payload.
nlohmann::json make_envelope(const std::string& command, nlohmann::json inputs,
                             nlohmann::json tolerances, nlohmann::json result);

nlohmann::json to_json(const AtomicMeasure& m);
nlohmann::json to_json(const PiecewiseLinearConcave& f);
nlohmann::json to_json(const Solution2D& s);
nlohmann::json to_json(const RidgeVerdict& v);
nlohmann::json to_json(const SurfaceMeasure2D& m);

/// Parses {"vertices":[[x,z],...]} or {"vertices":[[x,y,z],...]} or
/// {"facets":[{"normal":[...],"area":...},...]}.
std::variant<ConvexBody2D, ConvexPolytope3D> body_from_json(const nlohmann::json& j);

}  // namespace newtres
