#pragma once

#include <iosfwd>

#include "newtres/geometry.hpp"

namespace newtres {

/// Which parameter-plane diagram to emit.
///   slope_cases: four solution regimes over the (k1, k2) slope plane,
///   angle_cases: the same four regimes over the (phi1, phi2) angle plane,
///   ridge_admissible: ridge-point verdicts over (phi1, phi2) at fixed theta.
enum class MapKind { slope_cases, angle_cases, ridge_admissible };

struct RegionMapOptions {
  MapKind kind = MapKind::angle_cases;
  int resolution = 400;
  double theta = 0.0;  // ridge_admissible only
  double k_min = -3.0; // slope_cases window
  double k_max = 3.0;
};

/// One row per grid cell with phi2 < phi1 (or k2 < k1), ordered by the first
/// coordinate then the second. Columns:
///   slope/angle maps: k1,k2,label  /  phi1,phi2,label
///   ridge map:        phi1,phi2,admissible,regime,violated
void write_region_csv(std::ostream& out, const RegionMapOptions& opts);

/// Filled-cell diagram of the same grid; adjacent same-label cells in a row
/// are merged, one path per label. Byte-identical for identical options.
void write_region_svg(std::ostream& out, const RegionMapOptions& opts);

}  // namespace newtres
