#include "newtres/envelope.hpp"

#include <cmath>
#include <stdexcept>

namespace newtres {

namespace {

constexpr double kInvSqrt3 = std::numbers::inv_sqrt3;

LinearPiece chord(double a, double b) {
  const double s = (p(b) - p(a)) / (b - a);
  return LinearPiece{a, b, p(a) - s * a, s};
}

}  // namespace

SlopeWindow::SlopeWindow(double k2_, double k1_) : k2(k2_), k1(k1_) {
  if (!std::isfinite(k2) || !std::isfinite(k1)) {
    throw std::invalid_argument("slope window must be finite; clamp infinite slopes first");
  }
  if (!(k2 < k1)) {
    throw std::invalid_argument("slope window requires k2 < k1");
  }
}

double p(double xi) { return 1.0 / (1.0 + xi * xi); }

double p_prime(double xi) {
  const double d = 1.0 + xi * xi;
  return -2.0 * xi / (d * d);
}

EnvelopeDescription classify_window(const SlopeWindow& w) {
  const double k1 = w.k1, k2 = w.k2;

  // The two case-I conditions. Their negations are reused verbatim below so
  // that the four branches partition the half-plane {k2 < k1} even under
  // floating point.
  const bool below_upper = (k1 + k2 <= std::sqrt(1.0 + k2 * k2));
  const bool above_lower = (k1 + k2 >= -std::sqrt(1.0 + k1 * k1));

  if (below_upper && above_lower) {
    EnvelopeDescription d;
    d.label = EnvelopeCase::I;
    d.linear = chord(k2, k1);
    return d;
  }
  if (k1 <= -kInvSqrt3 || k2 >= kInvSqrt3) {
    EnvelopeDescription d;
    d.label = EnvelopeCase::II;
    d.curved = {k2, k1};
    return d;
  }
  if (k2 < kInvSqrt3 && !below_upper) {
    // Tangent line from (k2, p(k2)): k_bar solves k^2 + 2*k2*k - 1 = 0; the
    // negative root lies outside the window.
    const double k_bar = -k2 + std::sqrt(1.0 + k2 * k2);
    EnvelopeDescription d;
    d.label = EnvelopeCase::III;
    d.tangent_slope = k_bar;
    d.linear = chord(k2, k_bar);
    d.curved = {k_bar, k1};
    return d;
  }
  if (k1 > -kInvSqrt3 && !above_lower) {
    const double k_bar = -k1 - std::sqrt(1.0 + k1 * k1);
    EnvelopeDescription d;
    d.label = EnvelopeCase::IV;
    d.tangent_slope = k_bar;
    d.linear = chord(k_bar, k1);
    d.curved = {k2, k_bar};
    return d;
  }
  throw std::logic_error("slope window escaped the case partition");
}

double p_bar(const SlopeWindow& w, double xi) {
  if (!(xi >= w.k2 && xi <= w.k1)) {
    throw std::invalid_argument("p_bar evaluation point outside the slope window");
  }
  const EnvelopeDescription d = classify_window(w);
  if (d.linear && xi >= d.linear->lo && xi <= d.linear->hi) {
    return d.linear->intercept + d.linear->slope * xi;
  }
  return p(xi);
}

const char* to_string(EnvelopeCase c) {
  switch (c) {
    case EnvelopeCase::I: return "i";
    case EnvelopeCase::II: return "ii";
    case EnvelopeCase::III: return "iii";
    case EnvelopeCase::IV: return "iv";
  }
  return "?";
}

}  // namespace newtres
