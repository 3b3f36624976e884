#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "newtres/geometry.hpp"

namespace newtres {

/// Dihedral tangent-cone data of a ridge point: edge inclination theta in
/// [0, pi/2) and face-normal angles -pi/2 < phi2 < phi1 < pi/2.
struct DihedralData {
  Angle theta;
  Angle phi1;
  Angle phi2;
  DihedralData(Angle theta_, Angle phi1_, Angle phi2_);
};

/// theta >= pi/4 (a), 0 < theta < pi/4 (b), theta == 0 exactly (c).
enum class RidgeRegime { a, b, c };

/// "admissible" means "not excluded by the necessary conditions"; the
/// conditions are not sufficient.
struct RidgeVerdict {
  bool admissible = false;
  RidgeRegime regime = RidgeRegime::a;
  /// Names of the failed constraints, empty iff admissible. In regime c the
  /// marker "exceptional-point" is appended when both alternatives fail.
  std::vector<std::string> violated;
  /// Minimal admissible |phi|; present iff regime b.
  std::optional<Angle> phi_star;
};

RidgeVerdict classify_ridge(const DihedralData& d);

/// arccos((1/sqrt(2)) / cos(theta)) for theta in (0, pi/4); strictly
/// decreasing from pi/4 to 0 across that interval.
Angle phi_star(Angle theta);

/// Verdicts over the uniform interior grid of (phi1, phi2) in
/// (-pi/2, pi/2)^2 restricted to {phi2 < phi1}.
class RegionGrid {
 public:
  RegionGrid(Angle theta, int resolution);

  int resolution() const { return resolution_; }
  const std::vector<double>& angles() const { return angles_; }

  // phi1 = angles[i], phi2 = angles[j]
  bool valid(int i, int j) const {
    return i >= 0 && j >= 0 && i < resolution_ && j < i;
  }
  bool admissible(int i, int j) const { return valid(i, j) && admissible_[idx(i, j)]; }
  const RidgeVerdict& verdict(int i, int j) const;

  /// Connected components (4-neighbor) of the admissible cell set.
  int components() const;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(j) * resolution_ + i;
  }
  int resolution_;
  std::vector<double> angles_;
  std::vector<std::uint8_t> admissible_;
  std::vector<std::int32_t> verdict_index_;
  std::vector<RidgeVerdict> verdicts_;
};

/// Interior grid values -pi/2 + (i+1)*pi/(n+1), i = 0..n-1. Resolutions with
/// n = 3 (mod 4) place pi/4, 0 and -pi/4 exactly on the grid, which matters
/// for the isolated admissible points at theta = 0.
std::vector<double> region_grid_angles(int resolution);

RegionGrid admissible_region_sample(Angle theta, int resolution);

const char* to_string(RidgeRegime r);

}  // namespace newtres
