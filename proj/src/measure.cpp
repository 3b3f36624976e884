#include "newtres/measure.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "newtres/hull3d.hpp"

namespace newtres {

namespace {

constexpr double kBalanceTol3D = 1e-9;

double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

/// Normal angle phi in (-pi, pi] of a unit normal (n1, n3) under
/// (-sin phi, cos phi) -> phi.
double normal_angle(const Vec2& n) {
  const double phi = std::atan2(-n.x(), n.y());
  return phi == -kPi ? kPi : phi;
}

double positive_part_cubed(double c) {
  const double cp = std::max(c, 0.0);
  return cp * cp * cp;
}

}  // namespace

ConvexBody2D ConvexBody2D::from_vertices(std::vector<Vec2> vertices) {
  // Drop consecutive duplicates (including around the wrap).
  std::vector<Vec2> v;
  v.reserve(vertices.size());
  for (const Vec2& pt : vertices) {
    if (!pt.allFinite()) throw std::invalid_argument("vertex coordinates must be finite");
    if (v.empty() || (pt - v.back()).norm() > 0.0) v.push_back(pt);
  }
  while (v.size() > 1 && (v.front() - v.back()).norm() == 0.0) v.pop_back();

  if (v.size() < 2) throw std::invalid_argument("degenerate polygon: fewer than 2 distinct vertices");
  if (v.size() == 2) return ConvexBody2D(std::move(v));

  int sign = 0;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e0 = v[(i + 1) % n] - v[i];
    const Vec2 e1 = v[(i + 2) % n] - v[(i + 1) % n];
    const double c = cross2(e0, e1);
    if (c == 0.0) throw std::invalid_argument("input not convex: collinear vertices");
    const int s = c > 0.0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign) throw std::invalid_argument("input not convex");
  }
  if (sign < 0) std::reverse(v.begin(), v.end());
  return ConvexBody2D(std::move(v));
}

ConvexPolytope3D ConvexPolytope3D::from_facets(std::vector<Facet3> facets) {
  Vec3 acc = Vec3::Zero();
  double total_area = 0.0;
  for (Facet3& f : facets) {
    if (!(f.area > 0.0) || !std::isfinite(f.area)) {
      throw std::invalid_argument("facet area must be positive and finite");
    }
    const double len = f.normal.norm();
    if (!std::isfinite(len) || std::abs(len - 1.0) > 1e-6) {
      throw std::invalid_argument("facet normal must be a unit vector");
    }
    f.normal /= len;
    acc += f.area * f.normal;
    total_area += f.area;
  }
  if (facets.size() < 4) throw std::invalid_argument("a closed polytope needs at least 4 facets");
  if (acc.norm() > kBalanceTol3D * std::max(1.0, total_area)) {
    throw std::invalid_argument("unbalanced facet list: sum(area*normal) != 0");
  }
  return ConvexPolytope3D(std::move(facets));
}

ConvexPolytope3D ConvexPolytope3D::from_points(std::span<const Vec3> points) {
  const auto tris = convex_hull_triangles(points);
  double scale = 0.0;
  for (const Vec3& p : points) scale = std::max(scale, p.cwiseAbs().maxCoeff());

  std::vector<Facet3> facets;
  facets.reserve(tris.size());
  for (const auto& t : tris) {
    const Vec3 n = (points[t[1]] - points[t[0]]).cross(points[t[2]] - points[t[0]]);
    const double two_area = n.norm();
    if (two_area <= 1e-20 * scale * scale) continue;  // sliver from coplanar merging
    facets.push_back({n / two_area, 0.5 * two_area});
  }
  return ConvexPolytope3D(std::move(facets));
}

double ConvexPolytope3D::balance_residual() const {
  Vec3 acc = Vec3::Zero();
  for (const Facet3& f : facets_) acc += f.area * f.normal;
  return acc.norm();
}

Vec2 SurfaceMeasure2D::moment() const {
  Vec2 acc = Vec2::Zero();
  for (const SurfaceAtom2D& a : atoms) acc += a.mass * Vec2(-std::sin(a.phi), std::cos(a.phi));
  return acc;
}

SurfaceMeasure2D surface_measure_2d(const ConvexBody2D& b) {
  const std::vector<Vec2>& v = b.vertices();
  SurfaceMeasure2D m;
  if (b.degenerate()) {
    // Segment traversed both ways: two opposite edges of equal mass.
    const Vec2 e = v[1] - v[0];
    const double len = e.norm();
    const Vec2 n_right = Vec2(e.y(), -e.x()) / len;
    m.atoms.push_back({normal_angle(n_right), len});
    m.atoms.push_back({normal_angle(-n_right), len});
    return m;
  }
  const std::size_t n = v.size();
  m.atoms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e = v[(i + 1) % n] - v[i];
    const double len = e.norm();
    const Vec2 nrm = Vec2(e.y(), -e.x()) / len;  // outward for ccw rings
    m.atoms.push_back({normal_angle(nrm), len});
  }
  return m;
}

double resistance_2d(const ConvexBody2D& b) {
  double acc = 0.0;
  for (const SurfaceAtom2D& a : surface_measure_2d(b).atoms) {
    acc += a.mass * positive_part_cubed(std::cos(a.phi));
  }
  return acc;
}

double resistance_3d(const ConvexPolytope3D& p) {
  double acc = 0.0;
  for (const Facet3& f : p.facets()) {
    acc += f.area * positive_part_cubed(f.normal.z());
  }
  return acc;
}

ConvexBody2D body_from_function(const PiecewiseLinearConcave& f) {
  const std::vector<Vec2>& bp = f.breakpoints;
  if (bp.size() < 2) throw std::invalid_argument("function needs at least two breakpoints");

  // Graph breakpoints with consecutive collinear segments merged.
  std::vector<Vec2> graph;
  graph.push_back(bp.front());
  for (std::size_t i = 1; i + 1 < bp.size(); ++i) {
    const Vec2 a = bp[i] - graph.back();
    const Vec2 b = bp[i + 1] - bp[i];
    if (std::abs(cross2(a, b)) > 1e-14 * a.norm() * b.norm()) graph.push_back(bp[i]);
  }
  graph.push_back(bp.back());

  if (graph.size() == 2) {
    return ConvexBody2D::from_vertices({graph.front(), graph.back()});
  }
  // Chord first (left to right), then the graph right to left.
  std::vector<Vec2> ring;
  ring.reserve(graph.size());
  ring.push_back(graph.front());
  ring.push_back(graph.back());
  for (std::size_t i = graph.size() - 2; i >= 1; --i) ring.push_back(graph[i]);
  return ConvexBody2D::from_vertices(std::move(ring));
}

}  // namespace newtres
