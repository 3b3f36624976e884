#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "newtres/geometry.hpp"
#include "newtres/solver2d.hpp"

namespace newtres::testing {

/// Deterministic uniform doubles; test-local so fixtures never depend on
/// library internals.
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : gen_(seed) {}
  double next() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double next(double lo, double hi) { return lo + (hi - lo) * next(); }
  int next_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next() * (hi - lo + 1));
  }

 private:
  std::mt19937_64 gen_;
};

/// Piecewise-linear lower convex hull of the points (x[i], y[i]), x strictly
/// increasing. Used as the independent envelope oracle.
struct LowerHull {
  std::vector<double> x, y;

  double eval(double q) const {
    if (q <= x.front()) return y.front();
    if (q >= x.back()) return y.back();
    const auto it = std::upper_bound(x.begin(), x.end(), q);
    const std::size_t i = static_cast<std::size_t>(it - x.begin());
    const double t = (q - x[i - 1]) / (x[i] - x[i - 1]);
    return y[i - 1] + t * (y[i] - y[i - 1]);
  }
};

inline LowerHull lower_hull(const std::vector<double>& xs, const std::vector<double>& ys) {
  LowerHull h;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    while (h.x.size() >= 2) {
      const std::size_t m = h.x.size();
      const double cross = (h.x[m - 1] - h.x[m - 2]) * (ys[k] - h.y[m - 2]) -
                           (h.y[m - 1] - h.y[m - 2]) * (xs[k] - h.x[m - 2]);
      if (cross <= 0.0) {
        h.x.pop_back();
        h.y.pop_back();
      } else {
        break;
      }
    }
    h.x.push_back(xs[k]);
    h.y.push_back(ys[k]);
  }
  return h;
}

/// Random problem landing in the requested solution regime. Margins keep the
/// draw away from regime boundaries so labels are unambiguous.
inline AngleProblem random_problem(TestRng& rng, SolutionCase target) {
  const double m = 0.01;
  switch (target) {
    case SolutionCase::i: {
      for (;;) {
        const double f1 = rng.next(-kHalfPi + m, kHalfPi - m);
        const double f2 = rng.next(-kHalfPi + m, f1 - 5 * m);
        if (2 * f1 + f2 <= kHalfPi - m && f1 + 2 * f2 >= -kHalfPi + m) {
          return AngleProblem(Angle(rng.next(f2 + m, f1 - m)), Angle(f1), Angle(f2));
        }
      }
    }
    case SolutionCase::ii: {
      if (rng.next() < 0.5) {
        const double f2 = rng.next(kPi / 6 + m, kHalfPi - 6 * m);
        const double f1 = rng.next(f2 + 4 * m, kHalfPi - m);
        return AngleProblem(Angle(rng.next(f2 + m, f1 - m)), Angle(f1), Angle(f2));
      }
      const double f1 = rng.next(-kHalfPi + 6 * m, -kPi / 6 - m);
      const double f2 = rng.next(-kHalfPi + m, f1 - 4 * m);
      return AngleProblem(Angle(rng.next(f2 + m, f1 - m)), Angle(f1), Angle(f2));
    }
    case SolutionCase::iii_a:
    case SolutionCase::iii_b: {
      const double f2 = rng.next(-kHalfPi + 6 * m, kPi / 6 - 3 * m);
      const double bar = 0.25 * (kPi - 2 * f2);
      const double f1 = rng.next(bar + 2 * m, kHalfPi - m * 0.5);
      const double f0 = (target == SolutionCase::iii_a) ? rng.next(f2 + m, bar - m)
                                                        : rng.next(bar + m, f1 - m);
      return AngleProblem(Angle(f0), Angle(f1), Angle(f2));
    }
    case SolutionCase::iv_a:
    case SolutionCase::iv_b: {
      const double f1 = rng.next(-kPi / 6 + 3 * m, kHalfPi - 6 * m);
      const double bar = -0.25 * (kPi + 2 * f1);
      const double f2 = rng.next(-kHalfPi + m * 0.5, bar - 2 * m);
      const double f0 = (target == SolutionCase::iv_a) ? rng.next(bar + m, f1 - m)
                                                       : rng.next(f2 + m, bar - m);
      return AngleProblem(Angle(f0), Angle(f1), Angle(f2));
    }
  }
  throw std::logic_error("unknown target case");
}

inline SolutionCase nth_case(int k) {
  constexpr SolutionCase cases[6] = {SolutionCase::i,     SolutionCase::ii,
                                     SolutionCase::iii_a, SolutionCase::iii_b,
                                     SolutionCase::iv_a,  SolutionCase::iv_b};
  return cases[k % 6];
}

/// Random concave piecewise-linear graph on [0, ~1]: decreasing slopes in
/// [k_lo, k_hi], widths from a simplex draw, u(0) = 0.
inline PiecewiseLinearConcave random_concave(TestRng& rng, int segments, double k_lo,
                                             double k_hi) {
  std::vector<double> slopes(segments), widths(segments);
  for (double& s : slopes) s = rng.next(k_lo, k_hi);
  std::sort(slopes.begin(), slopes.end(), std::greater<>());
  double total = 0.0;
  for (double& w : widths) {
    w = -std::log1p(-rng.next());
    total += w;
  }
  PiecewiseLinearConcave f;
  f.breakpoints.emplace_back(0.0, 0.0);
  double x = 0.0, z = 0.0;
  for (int i = 0; i < segments; ++i) {
    const double dx = widths[i] / total;
    x += dx;
    z += dx * slopes[i];
    f.breakpoints.emplace_back(x, z);
  }
  return f;
}

/// Random convex polygon: random edge vectors recentered to close the ring,
/// sorted by direction, then partial-summed.
inline std::vector<Vec2> random_convex_polygon(TestRng& rng, int edges) {
  std::vector<Vec2> e(edges);
  Vec2 mean = Vec2::Zero();
  for (Vec2& v : e) {
    v = Vec2(rng.next(-1.0, 1.0), rng.next(-1.0, 1.0));
    mean += v;
  }
  mean /= edges;
  for (Vec2& v : e) v -= mean;
  std::sort(e.begin(), e.end(), [](const Vec2& a, const Vec2& b) {
    return std::atan2(a.y(), a.x()) < std::atan2(b.y(), b.x());
  });
  std::vector<Vec2> verts;
  Vec2 cur(rng.next(-1.0, 1.0), rng.next(-1.0, 1.0));
  for (const Vec2& v : e) {
    verts.push_back(cur);
    cur += v;
  }
  return verts;
}

inline std::vector<Vec3> random_cloud(TestRng& rng, int n) {
  std::vector<Vec3> pts(n);
  for (Vec3& p : pts) p = Vec3(rng.next(-1.0, 1.0), rng.next(-1.0, 1.0), rng.next(-1.0, 1.0));
  return pts;
}

}  // namespace newtres::testing
