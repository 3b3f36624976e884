#include "newtres/serialize.hpp"

#include <stdexcept>

namespace newtres {

using nlohmann::json;

json make_envelope(const std::string& command, json inputs, json tolerances, json result) {
  json j;
  j["command"] = command;
  j["version"] = kToolVersion;
  j["inputs"] = std::move(inputs);
  j["tolerances"] = std::move(tolerances);
  j["result"] = std::move(result);
  return j;
}

json to_json(const AtomicMeasure& m) {
  json atoms = json::array();
  for (const MeasureAtom& a : m.atoms) {
    atoms.push_back({{"phi", a.phi.rad()}, {"weight", a.weight}});
  }
  return atoms;
}

json to_json(const PiecewiseLinearConcave& f) {
  json bp = json::array();
  for (const Vec2& p : f.breakpoints) bp.push_back({p.x(), p.y()});
  return bp;
}

json to_json(const Solution2D& s) {
  json j;
  j["case"] = to_string(s.label);
  j["atoms"] = to_json(s.measure);
  j["breakpoints"] = to_json(s.function);
  j["value"] = s.value;
  return j;
}

json to_json(const RidgeVerdict& v) {
  json j;
  j["admissible"] = v.admissible;
  j["regime"] = to_string(v.regime);
  j["violated"] = v.violated;
  if (v.phi_star) j["phi_star"] = v.phi_star->rad();
  return j;
}

json to_json(const SurfaceMeasure2D& m) {
  json atoms = json::array();
  for (const SurfaceAtom2D& a : m.atoms) {
    atoms.push_back({{"phi", a.phi}, {"mass", a.mass}});
  }
  return atoms;
}

std::variant<ConvexBody2D, ConvexPolytope3D> body_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("body file must hold a JSON object");

  if (j.contains("facets")) {
    std::vector<Facet3> facets;
    for (const json& f : j.at("facets")) {
      const auto& n = f.at("normal");
      if (!n.is_array() || n.size() != 3) {
        throw std::invalid_argument("facet normal must be a 3-vector");
      }
      facets.push_back({Vec3(n[0].get<double>(), n[1].get<double>(), n[2].get<double>()),
                        f.at("area").get<double>()});
    }
    return ConvexPolytope3D::from_facets(std::move(facets));
  }

  if (!j.contains("vertices")) {
    throw std::invalid_argument("body file needs \"vertices\" or \"facets\"");
  }
  const json& verts = j.at("vertices");
  if (!verts.is_array() || verts.empty() || !verts[0].is_array()) {
    throw std::invalid_argument("\"vertices\" must be an array of coordinate arrays");
  }
  const std::size_t dim = verts[0].size();
  if (dim == 2) {
    std::vector<Vec2> v;
    for (const json& p : verts) {
      if (p.size() != 2) throw std::invalid_argument("mixed vertex dimensions");
      v.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
    return ConvexBody2D::from_vertices(std::move(v));
  }
  if (dim == 3) {
    std::vector<Vec3> v;
    for (const json& p : verts) {
      if (p.size() != 3) throw std::invalid_argument("mixed vertex dimensions");
      v.emplace_back(p[0].get<double>(), p[1].get<double>(), p[2].get<double>());
    }
    return ConvexPolytope3D::from_points(v);
  }
  throw std::invalid_argument("vertices must be 2D or 3D");
}

}  // namespace newtres
