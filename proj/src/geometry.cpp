#include "newtres/geometry.hpp"

#include <limits>
#include <stdexcept>

namespace newtres {

Angle::Angle(double radians) : rad_(radians) {
  // Written so NaN fails too.
  if (!(std::abs(radians) <= kHalfPi)) {
    throw std::invalid_argument("angle must be a finite value in [-pi/2, pi/2]");
  }
}

Angle angle_from_slope(Slope k) {
  if (std::isnan(k)) {
    throw std::invalid_argument("slope must not be NaN");
  }
  if (std::isinf(k)) {
    return Angle(k > 0 ? kHalfPi : -kHalfPi);
  }
  return Angle(std::atan(k));
}

Slope slope_from_angle(Angle a) {
  if (a.rad() == kHalfPi) return std::numeric_limits<double>::infinity();
  if (a.rad() == -kHalfPi) return -std::numeric_limits<double>::infinity();
  return std::tan(a.rad());
}

Vec2 dir2(Angle phi) { return Vec2(-phi.sin(), phi.cos()); }

Vec3 dir3(Angle phi, Angle theta) {
  if (theta.rad() < 0.0 || theta.rad() >= kHalfPi) {
    throw std::invalid_argument("theta must lie in [0, pi/2)");
  }
  return Vec3(-phi.sin(), phi.cos() * theta.sin(), phi.cos() * theta.cos());
}

}  // namespace newtres
