#pragma once

#include <array>
#include <span>
#include <vector>

#include "newtres/geometry.hpp"

namespace newtres {

/// Incremental convex hull of a 3D point cloud.
///
/// Returns triangles as index triples into `points`, oriented so that
/// (b-a) x (c-a) points outward. Coplanar inputs (e.g. cube faces) come out
/// as multiple triangles sharing a normal. Throws std::invalid_argument if
/// the cloud is degenerate (fewer than 4 affinely independent points).
std::vector<std::array<int, 3>> convex_hull_triangles(std::span<const Vec3> points);

}  // namespace newtres
