#include "newtres/solver2d.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace newtres {

namespace {

constexpr double kWeightPrune = 1e-15;
constexpr double kSixthPi = std::numbers::pi / 6.0;

double cos3(Angle a) {
  const double c = a.cos();
  return c * c * c;
}

/// Weights (w_a, w_b) with w_a*dir2(a) + w_b*dir2(b) = dir2(target).
Vec2 solve_pair_weights(Angle a, Angle b, Angle target) {
  Eigen::Matrix2d m;
  m.col(0) = dir2(a);
  m.col(1) = dir2(b);
  // Singular only for coincident or antiparallel directions; the latter is
  // the full-half-circle window [-pi/2, pi/2] where no two-atom optimum
  // exists (the infimum is not attained).
  if (std::abs(m.determinant()) < 1e-12) {
    throw std::runtime_error("degenerate moment system: atom directions are parallel");
  }
  return m.partialPivLu().solve(dir2(target));
}

AtomicMeasure make_measure(std::vector<MeasureAtom> atoms) {
  std::erase_if(atoms, [](const MeasureAtom& a) { return a.weight < kWeightPrune; });
  std::sort(atoms.begin(), atoms.end(),
            [](const MeasureAtom& a, const MeasureAtom& b) { return a.phi < b.phi; });
  if (atoms.empty()) {
    throw std::logic_error("solver produced an empty measure");
  }
  return AtomicMeasure{std::move(atoms)};
}

/// Graph of the concave function carried by the measure: segments ordered
/// steepest first (largest angle first), each atom contributing a segment of
/// length w, i.e. a step (w*cos(phi), w*sin(phi)).
PiecewiseLinearConcave function_from_measure(const AtomicMeasure& m) {
  PiecewiseLinearConcave f;
  f.breakpoints.reserve(m.atoms.size() + 1);
  f.breakpoints.emplace_back(0.0, 0.0);
  Vec2 cur(0.0, 0.0);
  for (auto it = m.atoms.rbegin(); it != m.atoms.rend(); ++it) {
    cur += it->weight * Vec2(it->phi.cos(), it->phi.sin());
    f.breakpoints.push_back(cur);
  }
  return f;
}

Solution2D finish(SolutionCase label, std::vector<MeasureAtom> atoms) {
  Solution2D s;
  s.label = label;
  s.measure = make_measure(std::move(atoms));
  s.function = function_from_measure(s.measure);
  s.value = resistance_value(s.measure);
  return s;
}

}  // namespace

AngleProblem::AngleProblem(Angle phi0_, Angle phi1_, Angle phi2_)
    : phi0(phi0_), phi1(phi1_), phi2(phi2_) {
  if (!(phi2 < phi0 && phi0 < phi1)) {
    throw std::invalid_argument("phi0 must lie strictly between phi2 and phi1");
  }
}

SlopeProblem::SlopeProblem(double k1_, double k2_, double K_, double x0_)
    : k1(k1_), k2(k2_), K(K_) {
  if (!std::isfinite(k1) || !std::isfinite(k2) || !std::isfinite(K)) {
    throw std::invalid_argument("slopes must be finite");
  }
  if (!(k2 < K && K < k1)) {
    throw std::invalid_argument("K must lie strictly between k2 and k1");
  }
  if (x0_ < 0.0 || std::isnan(x0_)) {
    throw std::invalid_argument("x0 must be positive");
  }
  const double w = (x0_ > 0.0) ? x0_ : 1.0;
  const double len = std::hypot(w, K * w);
  x0 = w / len;
  z0 = K * w / len;
}

Vec2 AtomicMeasure::moment() const {
  Vec2 acc(0.0, 0.0);
  for (const MeasureAtom& a : atoms) acc += a.weight * dir2(a.phi);
  return acc;
}

double PiecewiseLinearConcave::resistance() const {
  double acc = 0.0;
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    const double dx = breakpoints[i].x() - breakpoints[i - 1].x();
    if (dx <= 0.0) continue;  // vertical wall
    const double dz = breakpoints[i].y() - breakpoints[i - 1].y();
    const double slope = dz / dx;
    acc += dx / (1.0 + slope * slope);
  }
  return acc;
}

RegionLabel classify_angles_region(double phi1, double phi2) {
  // Region-i conditions; their exact negations drive the other branches so
  // the four regions partition {phi2 < phi1}.
  const bool below_upper = (2.0 * phi1 + phi2 <= kHalfPi);
  const bool above_lower = (phi1 + 2.0 * phi2 >= -kHalfPi);

  if (below_upper && above_lower) return RegionLabel::i;
  if (phi1 <= -kSixthPi || phi2 >= kSixthPi) return RegionLabel::ii;
  if (phi2 < kSixthPi && !below_upper) return RegionLabel::iii;
  if (phi1 > -kSixthPi && !above_lower) return RegionLabel::iv;
  throw std::logic_error("angle window escaped the region partition");
}

Solution2D solve_angles(const AngleProblem& p) {
  const Angle phi0 = p.phi0, phi1 = p.phi1, phi2 = p.phi2;

  switch (classify_angles_region(phi1.rad(), phi2.rad())) {
    case RegionLabel::i: {
      const Vec2 w = solve_pair_weights(phi1, phi2, phi0);
      return finish(SolutionCase::i, {{phi1, w(0)}, {phi2, w(1)}});
    }
    case RegionLabel::ii:
      return finish(SolutionCase::ii, {{phi0, 1.0}});
    case RegionLabel::iii: {
      const Angle tangent(0.25 * (kPi - 2.0 * phi2.rad()));
      if (phi0 >= tangent) {
        return finish(SolutionCase::iii_b, {{phi0, 1.0}});
      }
      const Vec2 w = solve_pair_weights(tangent, phi2, phi0);
      return finish(SolutionCase::iii_a, {{tangent, w(0)}, {phi2, w(1)}});
    }
    case RegionLabel::iv: {
      const Angle tangent(-0.25 * (kPi + 2.0 * phi1.rad()));
      if (phi0 <= tangent) {
        return finish(SolutionCase::iv_b, {{phi0, 1.0}});
      }
      const Vec2 w = solve_pair_weights(phi1, tangent, phi0);
      return finish(SolutionCase::iv_a, {{phi1, w(0)}, {tangent, w(1)}});
    }
  }
  throw std::logic_error("unreachable");
}

Solution2D solve_slopes(const SlopeProblem& p) {
  const AngleProblem ap(angle_from_slope(p.K), angle_from_slope(p.k1), angle_from_slope(p.k2));
  return solve_angles(ap);
}

double resistance_value(const AtomicMeasure& m) {
  double acc = 0.0;
  for (const MeasureAtom& a : m.atoms) acc += a.weight * cos3(a.phi);
  return acc;
}

const char* to_string(SolutionCase c) {
  switch (c) {
    case SolutionCase::i: return "i";
    case SolutionCase::ii: return "ii";
    case SolutionCase::iii_a: return "iii-a";
    case SolutionCase::iii_b: return "iii-b";
    case SolutionCase::iv_a: return "iv-a";
    case SolutionCase::iv_b: return "iv-b";
  }
  return "?";
}

const char* to_string(RegionLabel r) {
  switch (r) {
    case RegionLabel::i: return "i";
    case RegionLabel::ii: return "ii";
    case RegionLabel::iii: return "iii";
    case RegionLabel::iv: return "iv";
  }
  return "?";
}

}  // namespace newtres
