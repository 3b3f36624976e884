#pragma once

#include <vector>

#include "newtres/geometry.hpp"

namespace newtres {

/// Minimization data in angle form: target normal direction phi0 bracketed
/// by the window [phi2, phi1], with -pi/2 <= phi2 < phi0 < phi1 <= pi/2.
struct AngleProblem {
  Angle phi0;
  Angle phi1;
  Angle phi2;
  AngleProblem(Angle phi0_, Angle phi1_, Angle phi2_);
};

/// Minimization data in slope form: concave u on [0, x0] with u(0) = 0,
/// u(x0) = z0 = K*x0 and slopes in [k2, k1], k2 < K < k1.
///
/// (x0, z0) is rescaled on construction so that x0^2 + z0^2 = 1; the optimal
/// value scales linearly with that length and the case structure does not
/// change, so nothing is lost.
struct SlopeProblem {
  double k1;
  double k2;
  double K;
  double x0;
  double z0;
  /// Pass x0 <= 0 to request the normalized width directly.
  SlopeProblem(double k1_, double k2_, double K_, double x0_ = 0.0);
};

/// Six structural regimes of the optimal solution.
enum class SolutionCase { i, ii, iii_a, iii_b, iv_a, iv_b };

/// Coarse four-way region of the (phi1, phi2) parameter plane; the a/b split
/// of regions iii and iv additionally depends on phi0.
enum class RegionLabel { i, ii, iii, iv };

struct MeasureAtom {
  Angle phi;
  double weight;  // > 0
};

/// Finitely supported measure on angles, atoms sorted by angle ascending.
struct AtomicMeasure {
  std::vector<MeasureAtom> atoms;

  /// sum_i w_i * dir2(phi_i).
  Vec2 moment() const;
};

/// Concave piecewise-linear function given by its graph breakpoints, x
/// non-decreasing. A zero-width first or last segment stands for a vertical
/// wall (atom at +-pi/2) and contributes nothing to the resistance.
struct PiecewiseLinearConcave {
  std::vector<Vec2> breakpoints;

  double x0() const { return breakpoints.back().x(); }
  double z0() const { return breakpoints.back().y(); }

  /// Direct quadrature of 1/(1+u'^2) segment by segment.
  double resistance() const;
};

struct Solution2D {
  SolutionCase label;
  AtomicMeasure measure;
  PiecewiseLinearConcave function;
  double value;
};

/// Coarse region of a window (phi1, phi2); ties go to region i, matching the
/// non-strict inequalities of its defining conditions.
RegionLabel classify_angles_region(double phi1, double phi2);

/// Closed-form optimal measure (and the corresponding concave function) for
/// the angle-form problem.
Solution2D solve_angles(const AngleProblem& p);

/// Slope-form front end: converts to angles, solves, and rebuilds the
/// optimal broken-line function, steepest segment first.
Solution2D solve_slopes(const SlopeProblem& p);

/// sum_i w_i * cos^3(phi_i).
double resistance_value(const AtomicMeasure& m);

const char* to_string(SolutionCase c);
const char* to_string(RegionLabel r);

}  // namespace newtres
