#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "newtres/envelope.hpp"
#include "test_support.hpp"

using namespace newtres;

namespace {

/// Independent envelope oracle: lower convex hull of the densely sampled
/// graph of p, evaluated piecewise-linearly.
testing::LowerHull hull_envelope(const SlopeWindow& w, int n) {
  std::vector<double> xs(n), ys(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = w.k2 + (w.k1 - w.k2) * i / (n - 1);
    ys[i] = p(xs[i]);
  }
  return testing::lower_hull(xs, ys);
}

}  // namespace

TEST_CASE("p at reference points") {
  CHECK(p(0.0) == 1.0);
  CHECK(p(1.0) == 0.5);
  // inflection point of p, where p'' changes sign
  CHECK(p(1.0 / std::sqrt(3.0)) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("window validation") {
  CHECK_THROWS_AS(SlopeWindow(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(SlopeWindow(2.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(SlopeWindow(0.0, std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("classification of the worked windows") {
  CHECK(classify_window(SlopeWindow(-1.0, 1.0)).label == EnvelopeCase::I);
  CHECK(classify_window(SlopeWindow(1.0, 3.0)).label == EnvelopeCase::II);

  const EnvelopeDescription d = classify_window(SlopeWindow(0.0, 2.0));
  CHECK(d.label == EnvelopeCase::III);
  REQUIRE(d.tangent_slope.has_value());
  CHECK(*d.tangent_slope == doctest::Approx(1.0).epsilon(1e-15));

  const EnvelopeDescription m = classify_window(SlopeWindow(-2.0, 0.0));
  CHECK(m.label == EnvelopeCase::IV);
  REQUIRE(m.tangent_slope.has_value());
  CHECK(*m.tangent_slope == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("case-I boundary windows stay labelled I") {
  // k1 + k2 exactly equal to sqrt(1+k2^2)
  const double k2 = 0.25;
  const double k1 = std::sqrt(1.0 + k2 * k2) - k2;
  CHECK(classify_window(SlopeWindow(k2, k1)).label == EnvelopeCase::I);
}

TEST_CASE("p_bar worked values") {
  CHECK(p_bar(SlopeWindow(-1.0, 1.0), 0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p_bar(SlopeWindow(1.0, 3.0), 2.0) == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(p_bar(SlopeWindow(0.0, 2.0), 0.5) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK_THROWS_AS(p_bar(SlopeWindow(0.0, 2.0), 2.5), std::invalid_argument);
}

TEST_CASE("case III tangency relation and lower bound on k_bar") {
  testing::TestRng rng(777);
  for (int t = 0; t < 300; ++t) {
    const double k2 = rng.next(-4.0, 1.0 / std::sqrt(3.0) - 0.01);
    const double k_bar_expect = -k2 + std::sqrt(1.0 + k2 * k2);
    const double k1 = rng.next(k_bar_expect + 0.01, k_bar_expect + 4.0);
    const EnvelopeDescription d = classify_window(SlopeWindow(k2, k1));
    REQUIRE(d.label == EnvelopeCase::III);
    const double kb = *d.tangent_slope;
    CHECK(kb > 1.0 / std::sqrt(3.0));
    CHECK(kb > k2);
    CHECK(kb < k1);
    // chord slope equals the tangent slope at k_bar
    CHECK((p(kb) - p(k2)) / (kb - k2) == doctest::Approx(p_prime(kb)).epsilon(1e-10));
  }
}

TEST_CASE("envelope below p, equal at endpoints, convex") {
  testing::TestRng rng(991);
  for (int t = 0; t < 200; ++t) {
    // windows at least 2 wide so the second-difference check sits clear of
    // cancellation noise; narrow windows are covered by the hull comparison
    const double k2 = rng.next(-5.0, 3.0);
    const double k1 = k2 + rng.next(2.0, 5.0);
    const SlopeWindow w(k2, k1);
    CHECK(p_bar(w, k2) == doctest::Approx(p(k2)).epsilon(1e-12));
    CHECK(p_bar(w, k1) == doctest::Approx(p(k1)).epsilon(1e-12));

    const int n = 257;
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) {
      const double xi = std::min(k1, k2 + (k1 - k2) * i / (n - 1));
      vals[i] = p_bar(w, xi);
      CHECK(vals[i] <= p(xi) + 1e-12);
    }
    const double h = (k1 - k2) / (n - 1);
    for (int i = 1; i + 1 < n; ++i) {
      CHECK((vals[i - 1] - 2 * vals[i] + vals[i + 1]) / (h * h) >= -1e-10);
    }
    // on the curved part the envelope equals p
    const EnvelopeDescription d = classify_window(w);
    if (d.curved) {
      for (int i = 0; i < 33; ++i) {
        const double xi = std::clamp(
            d.curved->first + (d.curved->second - d.curved->first) * i / 32.0, k2, k1);
        CHECK(p_bar(w, xi) == doctest::Approx(p(xi)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("agreement with the discrete convex-hull oracle") {
  testing::TestRng rng(20240);
  for (int t = 0; t < 1000; ++t) {
    const double k2 = rng.next(-5.0, 4.9);
    const double k1 = rng.next(k2 + 0.05, 5.0);
    const SlopeWindow w(k2, k1);
    const testing::LowerHull hull = hull_envelope(w, 10000);
    for (int i = 0; i < 17; ++i) {
      const double xi = std::min(k1, k2 + (k1 - k2) * i / 16.0);
      CHECK(std::abs(p_bar(w, xi) - hull.eval(xi)) <= 1e-6);
    }
  }
}

TEST_CASE("exactly one case matches on random windows") {
  testing::TestRng rng(5150);
  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  for (int t = 0; t < 2000; ++t) {
    const double k2 = rng.next(-6.0, 5.9);
    const double k1 = rng.next(k2 + 1e-4, 6.0);
    const bool in_i = (k1 + k2 <= std::sqrt(1 + k2 * k2)) && (k1 + k2 >= -std::sqrt(1 + k1 * k1));
    const bool in_ii = (k1 <= -inv_sqrt3) || (k2 >= inv_sqrt3);
    const bool in_iii = (k2 < inv_sqrt3) && (k1 > std::sqrt(1 + k2 * k2) - k2);
    const bool in_iv = (k1 > -inv_sqrt3) && (k2 < -std::sqrt(1 + k1 * k1) - k1);
    CHECK(static_cast<int>(in_i) + in_ii + in_iii + in_iv == 1);
    const EnvelopeCase got = classify_window(SlopeWindow(k2, k1)).label;
    if (in_i) CHECK(got == EnvelopeCase::I);
    if (in_ii) CHECK(got == EnvelopeCase::II);
    if (in_iii) CHECK(got == EnvelopeCase::III);
    if (in_iv) CHECK(got == EnvelopeCase::IV);
  }
}
