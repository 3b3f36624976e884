#pragma once

#include <optional>
#include <utility>

#include "newtres/geometry.hpp"

namespace newtres {

/// Slope window [k2, k1], k2 < k1, both finite.
struct SlopeWindow {
  double k2;
  double k1;
  SlopeWindow(double k2_, double k1_);
};

/// Structure of the convex envelope of p(xi) = 1/(1+xi^2) on a window.
///
///   I   - one chord from endpoint to endpoint,
///   II  - envelope coincides with p,
///   III - chord from the left endpoint tangent at k_bar, then p,
///   IV  - p, then chord tangent at k_bar into the right endpoint.
enum class EnvelopeCase { I, II, III, IV };

/// Affine piece value = intercept + slope * xi on [lo, hi].
struct LinearPiece {
  double lo;
  double hi;
  double intercept;
  double slope;
};

struct EnvelopeDescription {
  EnvelopeCase label;
  /// Tangency slope k_bar; present for cases III and IV.
  std::optional<double> tangent_slope;
  /// Linear piece of the envelope; absent for case II.
  std::optional<LinearPiece> linear;
  /// Interval where the envelope equals p; absent for case I.
  std::optional<std::pair<double, double>> curved;
};

/// The resistance integrand 1/(1+xi^2).
double p(double xi);

/// d/dxi of p.
double p_prime(double xi);

/// Classify the window into cases I-IV and describe the envelope pieces.
/// Boundary windows (equality in the case-I conditions) are labelled I.
EnvelopeDescription classify_window(const SlopeWindow& w);

/// Value of the convex envelope of p on the window at xi in [k2, k1].
double p_bar(const SlopeWindow& w, double xi);

const char* to_string(EnvelopeCase c);

}  // namespace newtres
