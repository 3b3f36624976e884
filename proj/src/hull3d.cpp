#include "newtres/hull3d.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace newtres {

namespace {

struct Face {
  std::array<int, 3> v;
  std::array<int, 3> neighbor;  // neighbor[i] shares edge (v[i], v[(i+1)%3])
  Vec3 normal;                  // not normalized
  double offset;                // plane: normal . x = offset
  bool alive = true;
};

double signed_dist(const Face& f, const Vec3& p) { return f.normal.dot(p) - f.offset; }

void set_plane(Face& f, std::span<const Vec3> pts) {
  const Vec3& a = pts[f.v[0]];
  f.normal = (pts[f.v[1]] - a).cross(pts[f.v[2]] - a);
  f.offset = f.normal.dot(a);
}

}  // namespace

std::vector<std::array<int, 3>> convex_hull_triangles(std::span<const Vec3> points) {
  const int n = static_cast<int>(points.size());
  if (n < 4) throw std::invalid_argument("convex hull needs at least 4 points");

  double scale = 0.0;
  for (const Vec3& p : points) scale = std::max(scale, p.cwiseAbs().maxCoeff());
  if (scale == 0.0) scale = 1.0;
  const double eps = 1e-12 * scale;

  // Initial simplex: two extreme points, then the farthest from the line,
  // then the farthest from the plane.
  int i0 = 0, i1 = 0;
  for (int i = 1; i < n; ++i) {
    if (points[i].x() < points[i0].x()) i0 = i;
    if (points[i].x() > points[i1].x()) i1 = i;
  }
  if ((points[i1] - points[i0]).norm() <= eps) {
    for (int i = 0; i < n; ++i) {
      if ((points[i] - points[i0]).norm() > (points[i1] - points[i0]).norm()) i1 = i;
    }
  }
  const Vec3 d01 = points[i1] - points[i0];
  if (d01.norm() <= eps) throw std::invalid_argument("degenerate point cloud (all points coincide)");

  int i2 = -1;
  double best = eps * d01.norm();
  for (int i = 0; i < n; ++i) {
    const double a = d01.cross(points[i] - points[i0]).norm();
    if (a > best) { best = a; i2 = i; }
  }
  if (i2 < 0) throw std::invalid_argument("degenerate point cloud (collinear)");

  Vec3 nrm = d01.cross(points[i2] - points[i0]);
  int i3 = -1;
  best = eps * nrm.norm();
  for (int i = 0; i < n; ++i) {
    const double h = std::abs(nrm.dot(points[i] - points[i0]));
    if (h > best) { best = h; i3 = i; }
  }
  if (i3 < 0) throw std::invalid_argument("degenerate point cloud (coplanar)");
  if (nrm.dot(points[i3] - points[i0]) > 0.0) std::swap(i1, i2);  // keep i3 below (i0,i1,i2)

  std::vector<Face> faces;
  auto add_face = [&](int a, int b, int c) {
    Face f;
    f.v = {a, b, c};
    f.neighbor = {-1, -1, -1};
    set_plane(f, points);
    faces.push_back(f);
    return static_cast<int>(faces.size()) - 1;
  };
  auto link = [&](int fa, int ea, int fb, int eb) {
    faces[fa].neighbor[ea] = fb;
    faces[fb].neighbor[eb] = fa;
  };

  add_face(i0, i1, i2);
  add_face(i0, i3, i1);
  add_face(i1, i3, i2);
  add_face(i2, i3, i0);
  link(0, 0, 1, 2); link(0, 1, 2, 2); link(0, 2, 3, 2);
  link(1, 1, 2, 0); link(2, 1, 3, 0); link(3, 1, 1, 0);

  std::vector<int> visible, stack;
  std::vector<char> mark(64, 0);
  for (int pi = 0; pi < n; ++pi) {
    if (pi == i0 || pi == i1 || pi == i2 || pi == i3) continue;
    const Vec3& pt = points[pi];

    // Strictly visible seed face; skip interior points.
    int seed = -1;
    double seed_d = eps;
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
      if (!faces[fi].alive) continue;
      const double d = signed_dist(faces[fi], pt) / faces[fi].normal.norm();
      if (d > seed_d) { seed_d = d; seed = fi; }
    }
    if (seed < 0) continue;

    // Flood the visible region; coplanar faces count as visible so points on
    // existing facet planes (cube corners) extend the region cleanly.
    visible.clear();
    stack.assign(1, seed);
    mark.assign(faces.size(), 0);
    mark[seed] = 1;
    while (!stack.empty()) {
      const int fi = stack.back();
      stack.pop_back();
      visible.push_back(fi);
      for (int e = 0; e < 3; ++e) {
        const int nb = faces[fi].neighbor[e];
        if (nb < 0 || mark[nb] || !faces[nb].alive) continue;
        const double d = signed_dist(faces[nb], pt) / faces[nb].normal.norm();
        if (d > -eps) { mark[nb] = 1; stack.push_back(nb); }
      }
    }
    for (int fi : visible) faces[fi].alive = false;

    // Horizon: edges from a visible face into a surviving one.
    struct HorizonEdge { int a, b, outside_face, outside_edge; };
    std::vector<HorizonEdge> horizon;
    for (int fi : visible) {
      for (int e = 0; e < 3; ++e) {
        const int nb = faces[fi].neighbor[e];
        if (nb >= 0 && faces[nb].alive) {
          const int a = faces[fi].v[e];
          const int b = faces[fi].v[(e + 1) % 3];
          int eb = 0;
          while (faces[nb].neighbor[eb] != fi) ++eb;
          horizon.push_back({a, b, nb, eb});
        }
      }
    }
    if (horizon.empty()) throw std::logic_error("convex hull horizon collapsed");

    // Fan of new faces from the point across the horizon.
    std::map<int, int> first_vertex_to_face;
    std::vector<int> fresh;
    for (const HorizonEdge& he : horizon) {
      const int nf = add_face(he.a, he.b, pi);
      link(nf, 0, he.outside_face, he.outside_edge);
      first_vertex_to_face[he.a] = nf;
      fresh.push_back(nf);
    }
    for (const int nf : fresh) {
      // edge 1 of nf is (b, pi); its partner starts at b.
      const int partner = first_vertex_to_face.at(faces[nf].v[1]);
      link(nf, 1, partner, 2);
    }
  }

  std::vector<std::array<int, 3>> out;
  for (const Face& f : faces) {
    if (f.alive) out.push_back(f.v);
  }
  return out;
}

}  // namespace newtres
