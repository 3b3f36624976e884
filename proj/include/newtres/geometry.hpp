#pragma once

#include <Eigen/Core>

#include <cmath>
#include <numbers>

namespace newtres {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;
inline constexpr double kQuarterPi = std::numbers::pi / 4.0;

/// Angle in radians, restricted to [-pi/2, pi/2].
///
/// All problem parameters are angles of outward normals measured from the
/// vertical, so this closed range is the whole domain of interest. Slopes
/// (tangents) are a thin conversion layer on top and blow up at +-pi/2,
/// which is why the angle is the canonical representation.
class Angle {
 public:
  Angle() = default;
  explicit Angle(double radians);

  double rad() const { return rad_; }
  double sin() const { return std::sin(rad_); }
  double cos() const { return std::cos(rad_); }

  friend bool operator<(Angle a, Angle b) { return a.rad_ < b.rad_; }
  friend bool operator>(Angle a, Angle b) { return a.rad_ > b.rad_; }
  friend bool operator<=(Angle a, Angle b) { return a.rad_ <= b.rad_; }
  friend bool operator>=(Angle a, Angle b) { return a.rad_ >= b.rad_; }
  friend bool operator==(Angle a, Angle b) { return a.rad_ == b.rad_; }

 private:
  double rad_ = 0.0;
};

/// Dimensionless slope; +-infinity only appears at conversion boundaries.
using Slope = double;

/// arctan(k); +-infinity maps to +-pi/2. NaN is rejected.
Angle angle_from_slope(Slope k);

/// tan(a); +-pi/2 maps to +-infinity.
Slope slope_from_angle(Angle a);

/// Unit vector (-sin phi, cos phi).
Vec2 dir2(Angle phi);

/// Unit vector (-sin phi, cos phi sin theta, cos phi cos theta).
/// Requires theta in [0, pi/2).
Vec3 dir3(Angle phi, Angle theta);

}  // namespace newtres
