#pragma once

#include <cstdint>
#include <vector>

#include "newtres/solver2d.hpp"

namespace newtres {

/// Discretization of the angle window for the pair-enumeration oracle.
struct GridSpec {
  /// Number of uniform grid atoms covering [phi2, phi1], endpoints included.
  int n = 2001;
  /// Extra atoms to inject (e.g. the closed-form solver's atom angles).
  std::vector<Angle> extra_atoms;
};

struct OracleResult {
  AtomicMeasure measure;
  double value;
};

/// Exhaustive minimum over all measures supported on at most two grid atoms.
/// The two scalar moment constraints make such measures the basic feasible
/// solutions of the discretized problem, so this is an exact minimizer on
/// the grid while sharing no code path with the closed-form solver.
/// Weights down to -1e-14 are accepted and clamped to zero.
OracleResult oracle_pairs(const AngleProblem& p, const GridSpec& g);

/// Best resistance over `samples` random admissible concave piecewise-linear
/// functions (32 segments): decreasing slope draws in [k2, k1], simplex
/// widths, then an exact positive rescaling that pins the endpoint.
/// Deterministic in `seed`.
double oracle_sampler(const SlopeProblem& p, int samples, std::uint64_t seed);

/// Thread cap for internal fan-out: NEWTON_RESIST_THREADS if set, else the
/// hardware concurrency. Results do not depend on the cap.
int thread_cap();

}  // namespace newtres
