#include "newtres/ridge.hpp"

#include <cmath>
#include <stdexcept>

namespace newtres {

namespace {

constexpr double kExceptionalTol = 1e-12;

void check(bool ok, std::vector<std::string>& violated, const char* name) {
  if (!ok) violated.emplace_back(name);
}

void check_triangle(double phi1, double phi2, std::vector<std::string>& violated) {
  check(2.0 * phi1 + phi2 <= kHalfPi, violated, "2phi1+phi2<=pi/2");
  check(phi1 + 2.0 * phi2 >= -kHalfPi, violated, "phi1+2phi2>=-pi/2");
}

bool near(double a, double b) { return std::abs(a - b) <= kExceptionalTol; }

}  // namespace

DihedralData::DihedralData(Angle theta_, Angle phi1_, Angle phi2_)
    : theta(theta_), phi1(phi1_), phi2(phi2_) {
  if (theta.rad() < 0.0 || theta.rad() >= kHalfPi) {
    throw std::invalid_argument("theta must lie in [0, pi/2)");
  }
  if (!(std::abs(phi1.rad()) < kHalfPi && std::abs(phi2.rad()) < kHalfPi)) {
    throw std::invalid_argument("phi1 and phi2 must lie strictly inside (-pi/2, pi/2)");
  }
  if (!(phi2 < phi1)) {
    throw std::invalid_argument("phi2 must be strictly less than phi1");
  }
}

Angle phi_star(Angle theta) {
  if (!(theta.rad() > 0.0 && theta.rad() < kQuarterPi)) {
    throw std::invalid_argument("phi_star requires theta strictly inside (0, pi/4)");
  }
  return Angle(std::acos((1.0 / std::numbers::sqrt2) / theta.cos()));
}

RidgeVerdict classify_ridge(const DihedralData& d) {
  const double t = d.theta.rad();
  const double f1 = d.phi1.rad();
  const double f2 = d.phi2.rad();

  RidgeVerdict v;
  if (t >= kQuarterPi) {
    v.regime = RidgeRegime::a;
    check_triangle(f1, f2, v.violated);
  } else if (t > 0.0) {
    v.regime = RidgeRegime::b;
    const Angle fs = phi_star(d.theta);
    v.phi_star = fs;
    check_triangle(f1, f2, v.violated);
    check(std::abs(f1) >= fs.rad(), v.violated, "abs(phi1)>=phi_star");
    check(std::abs(f2) >= fs.rad(), v.violated, "abs(phi2)>=phi_star");
  } else {
    v.regime = RidgeRegime::c;
    const bool exceptional = (near(f1, kQuarterPi) && near(f2, 0.0)) ||
                             (near(f1, 0.0) && near(f2, -kQuarterPi));
    if (!exceptional) {
      check_triangle(f1, f2, v.violated);
      check(f1 >= kQuarterPi, v.violated, "phi1>=pi/4");
      check(f2 <= -kQuarterPi, v.violated, "phi2<=-pi/4");
      if (!v.violated.empty()) v.violated.emplace_back("exceptional-point");
    }
  }
  v.admissible = v.violated.empty();
  return v;
}

std::vector<double> region_grid_angles(int resolution) {
  if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");
  std::vector<double> a(resolution);
  const double h = kPi / (resolution + 1);
  for (int i = 0; i < resolution; ++i) a[i] = -kHalfPi + (i + 1) * h;
  return a;
}

RegionGrid::RegionGrid(Angle theta, int resolution)
    : resolution_(resolution), angles_(region_grid_angles(resolution)) {
  const std::size_t cells = static_cast<std::size_t>(resolution) * resolution;
  admissible_.assign(cells, 0);
  verdict_index_.assign(cells, -1);
  for (int j = 0; j < resolution; ++j) {
    for (int i = j + 1; i < resolution; ++i) {
      RidgeVerdict v = classify_ridge(DihedralData(theta, Angle(angles_[i]), Angle(angles_[j])));
      admissible_[idx(i, j)] = v.admissible ? 1 : 0;
      verdict_index_[idx(i, j)] = static_cast<std::int32_t>(verdicts_.size());
      verdicts_.push_back(std::move(v));
    }
  }
}

const RidgeVerdict& RegionGrid::verdict(int i, int j) const {
  const std::int32_t k = verdict_index_[idx(i, j)];
  if (k < 0) throw std::out_of_range("no verdict below the diagonal phi2 < phi1");
  return verdicts_[k];
}

int RegionGrid::components() const {
  const int n = resolution_;
  std::vector<std::uint8_t> seen(admissible_.size(), 0);
  std::vector<std::pair<int, int>> stack;
  int count = 0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (!admissible(i, j) || seen[idx(i, j)]) continue;
      ++count;
      stack.assign(1, {i, j});
      seen[idx(i, j)] = 1;
      while (!stack.empty()) {
        const auto [ci, cj] = stack.back();
        stack.pop_back();
        const int di[4] = {1, -1, 0, 0};
        const int dj[4] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
          const int ni = ci + di[k], nj = cj + dj[k];
          if (ni < 0 || nj < 0 || ni >= n || nj >= n) continue;
          if (!admissible(ni, nj) || seen[idx(ni, nj)]) continue;
          seen[idx(ni, nj)] = 1;
          stack.push_back({ni, nj});
        }
      }
    }
  }
  return count;
}

RegionGrid admissible_region_sample(Angle theta, int resolution) {
  return RegionGrid(theta, resolution);
}

const char* to_string(RidgeRegime r) {
  switch (r) {
    case RidgeRegime::a: return "a";
    case RidgeRegime::b: return "b";
    case RidgeRegime::c: return "c";
  }
  return "?";
}

}  // namespace newtres
