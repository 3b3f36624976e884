#pragma once

#include <span>
#include <vector>

#include "newtres/geometry.hpp"
#include "newtres/solver2d.hpp"

namespace newtres {

/// Convex polygon in the (x, z) plane, vertices counterclockwise.
///
/// A two-vertex body (a segment, traversed once in each direction) is
/// accepted: the graph of a straight-line function closes into one, and
/// only the upward copy of the doubled edge carries resistance.
class ConvexBody2D {
 public:
  /// Validates convexity; consecutive duplicate vertices are dropped and a
  /// clockwise ring is reversed. Throws std::invalid_argument otherwise.
  static ConvexBody2D from_vertices(std::vector<Vec2> vertices);

  const std::vector<Vec2>& vertices() const { return vertices_; }
  bool degenerate() const { return vertices_.size() == 2; }

 private:
  explicit ConvexBody2D(std::vector<Vec2> v) : vertices_(std::move(v)) {}
  std::vector<Vec2> vertices_;
};

struct Facet3 {
  Vec3 normal;  // outward, unit length
  double area;  // > 0
};

/// Convex polytope described by its facet areas and outward normals.
class ConvexPolytope3D {
 public:
  /// Validates unit normals, positive areas and the closedness identity
  /// sum(area * normal) = 0 (tolerance 1e-9).
  static ConvexPolytope3D from_facets(std::vector<Facet3> facets);

  /// Convex hull of a point cloud; facets come from the hull triangulation.
  static ConvexPolytope3D from_points(std::span<const Vec3> points);

  const std::vector<Facet3>& facets() const { return facets_; }

  /// | sum(area * normal) |.
  double balance_residual() const;

 private:
  explicit ConvexPolytope3D(std::vector<Facet3> f) : facets_(std::move(f)) {}
  std::vector<Facet3> facets_;
};

/// One atom per edge: angle of the outward normal in (-pi, pi] under the
/// parametrization (-sin phi, cos phi), mass = edge length.
struct SurfaceAtom2D {
  double phi;
  double mass;
};

struct SurfaceMeasure2D {
  std::vector<SurfaceAtom2D> atoms;

  /// sum mass * (-sin phi, cos phi); zero for a closed body.
  Vec2 moment() const;
};

SurfaceMeasure2D surface_measure_2d(const ConvexBody2D& b);

/// sum over atoms of mass * max(cos phi, 0)^3.
double resistance_2d(const ConvexBody2D& b);

/// sum over facets of area * max(n_z, 0)^3.
double resistance_3d(const ConvexPolytope3D& p);

/// Body bounded above by the graph and below by the chord between the graph
/// endpoints. Consecutive collinear segments are merged; a straight-line
/// graph yields the degenerate two-vertex body.
ConvexBody2D body_from_function(const PiecewiseLinearConcave& f);

}  // namespace newtres
