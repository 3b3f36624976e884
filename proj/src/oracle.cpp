#include "newtres/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

namespace newtres {

namespace {

constexpr double kWeightTol = 1e-14;
constexpr double kSingularPairTol = 1e-12;

struct PairCandidate {
  double value = std::numeric_limits<double>::infinity();
  int a = -1;  // index of the upper atom; b < a
  int b = -1;
  double wa = 0.0, wb = 0.0;

  /// Total order: by value, then lexicographically by (a, b). The winner is
  /// the minimum of this order over all pairs, so any chunked scan agrees.
  bool better_than(const PairCandidate& o) const {
    if (value != o.value) return value < o.value;
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
};

struct AtomTable {
  std::vector<double> phi, s, c, c3;
  std::vector<double> sf0;  // sin(phi_i - phi0)
};

/// Enumerate pairs (b, a) with b < a and a in [a_lo, a_hi). A pair is
/// feasible when both moment weights are >= -kWeightTol; weights are clamped
/// to zero, which also covers the single-atom candidates.
PairCandidate scan_pairs(const AtomTable& t, int a_lo, int a_hi) {
  PairCandidate best;
  for (int a = a_lo; a < a_hi; ++a) {
    const double sa0 = t.sf0[a];                 // sin(phi_a - phi0)
    if (sa0 < -kWeightTol) continue;             // w_b < 0 for every partner
    for (int b = 0; b < a; ++b) {
      const double s0b = -t.sf0[b];              // sin(phi0 - phi_b)
      if (s0b < -kWeightTol) continue;           // w_a < 0
      const double sab = t.s[a] * t.c[b] - t.c[a] * t.s[b];
      if (sab < kSingularPairTol) continue;      // parallel directions
      if (s0b < -kWeightTol * sab || sa0 < -kWeightTol * sab) continue;
      const double inv = 1.0 / sab;
      const double wa = std::max(s0b * inv, 0.0);
      const double wb = std::max(sa0 * inv, 0.0);
      const double value = wa * t.c3[a] + wb * t.c3[b];
      if (value < best.value) {
        best = {value, a, b, wa, wb};
      }
    }
  }
  return best;
}

/// Uniform double in [0, 1) from a fully specified generator, avoiding
/// std::uniform_real_distribution whose output is implementation-defined.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : gen_(seed) {}
  double next() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double next(double lo, double hi) { return lo + (hi - lo) * next(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace

int thread_cap() {
  if (const char* env = std::getenv("NEWTON_RESIST_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

OracleResult oracle_pairs(const AngleProblem& p, const GridSpec& g) {
  if (g.n < 3) throw std::invalid_argument("grid needs at least 3 atoms");

  std::vector<double> phis;
  phis.reserve(g.n + g.extra_atoms.size());
  const double lo = p.phi2.rad(), hi = p.phi1.rad();
  for (int i = 0; i < g.n; ++i) {
    phis.push_back(lo + (hi - lo) * i / (g.n - 1));
  }
  for (const Angle& a : g.extra_atoms) {
    if (a.rad() < lo || a.rad() > hi) {
      throw std::invalid_argument("injected atom outside [phi2, phi1]");
    }
    phis.push_back(a.rad());
  }
  std::sort(phis.begin(), phis.end());
  phis.erase(std::unique(phis.begin(), phis.end(),
                         [](double x, double y) { return std::abs(x - y) <= 1e-13; }),
             phis.end());

  AtomTable t;
  const int n = static_cast<int>(phis.size());
  t.phi = std::move(phis);
  t.s.resize(n);
  t.c.resize(n);
  t.c3.resize(n);
  t.sf0.resize(n);
  const double s0 = p.phi0.sin(), c0 = p.phi0.cos();
  for (int i = 0; i < n; ++i) {
    t.s[i] = std::sin(t.phi[i]);
    t.c[i] = std::cos(t.phi[i]);
    t.c3[i] = t.c[i] * t.c[i] * t.c[i];
    t.sf0[i] = t.s[i] * c0 - t.c[i] * s0;
  }

  const int threads = std::clamp(std::min(thread_cap(), n / 256), 1, 64);
  PairCandidate best;
  if (threads <= 1) {
    best = scan_pairs(t, 1, n);
  } else {
    std::vector<PairCandidate> partial(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    // sqrt spacing balances the triangular pair loop.
    const auto bound = [&](int q) {
      return 1 + static_cast<int>((n - 1) * std::sqrt(static_cast<double>(q) / threads));
    };
    for (int k = 0; k < threads; ++k) {
      const int a_lo = bound(k), a_hi = (k + 1 == threads) ? n : bound(k + 1);
      pool.emplace_back([&, k, a_lo, a_hi] { partial[k] = scan_pairs(t, a_lo, a_hi); });
    }
    for (std::thread& th : pool) th.join();
    for (const PairCandidate& c : partial) {
      if (c.better_than(best)) best = c;
    }
  }

  if (best.a < 0) throw std::logic_error("no feasible atom pair on the grid");

  AtomicMeasure m;
  if (best.wb > 0.0) m.atoms.push_back({Angle(t.phi[best.b]), best.wb});
  if (best.wa > 0.0) m.atoms.push_back({Angle(t.phi[best.a]), best.wa});
  if (m.atoms.empty()) throw std::logic_error("oracle candidate has no mass");
  return {std::move(m), best.value};
}

double oracle_sampler(const SlopeProblem& p, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  constexpr int kSegments = 32;
  constexpr int kMaxRetries = 1000;

  DetRng rng(seed);
  double best = std::numeric_limits<double>::infinity();
  std::array<double, kSegments> slope, width;

  for (int s = 0; s < samples; ++s) {
    bool ok = false;
    for (int attempt = 0; attempt < kMaxRetries && !ok; ++attempt) {
      // Mix structures: optimal profiles use very few distinct slopes, often
      // including the bounds themselves, so draw the 32 slopes from a small
      // random palette most of the time and fully at random otherwise.
      const double structure = rng.next();
      int palette_size = 32;
      if (structure < 0.4) {
        palette_size = 2;
      } else if (structure < 0.7) {
        palette_size = 2 + static_cast<int>(rng.next() * 3.0);
      }
      std::array<double, 32> palette;
      for (int i = 0; i < palette_size; ++i) {
        const double r = rng.next();
        if (r < 0.25) {
          palette[i] = p.k1;
        } else if (r < 0.5) {
          palette[i] = p.k2;
        } else {
          palette[i] = rng.next(p.k2, p.k1);
        }
      }
      for (double& v : slope) {
        v = palette[std::min(palette_size - 1, static_cast<int>(rng.next() * palette_size))];
      }
      std::sort(slope.begin(), slope.end(), std::greater<>());
      double total = 0.0;
      for (double& v : width) {
        v = -std::log1p(-rng.next());  // Exp(1) gives uniform simplex weights
        total += v;
      }
      for (double& v : width) v *= p.x0 / total;

      // Split the endpoint defect around K and rescale each side positively;
      // widths stay positive and slopes stay sorted while sum(width*slope)
      // becomes z0 up to rounding.
      double above = 0.0, below = 0.0, w_above = 0.0, w_below = 0.0;
      for (int i = 0; i < kSegments; ++i) {
        const double excess = width[i] * (slope[i] - p.K);
        if (excess > 0.0) {
          above += excess;
          w_above += width[i];
        } else {
          below -= excess;
          w_below += width[i];
        }
      }
      if (above <= 0.0 || below <= 0.0) continue;  // all slopes on one side of K
      const double denom = below * w_above + above * w_below;
      const double alpha = p.x0 * below / denom;
      const double beta = p.x0 * above / denom;
      for (int i = 0; i < kSegments; ++i) {
        width[i] *= (width[i] * (slope[i] - p.K) > 0.0) ? alpha : beta;
      }
      ok = true;
    }
    if (!ok) {
      throw std::runtime_error(
          "sampler projection failed after " + std::to_string(kMaxRetries) +
          " retries (K too close to a slope bound?)");
    }
    double value = 0.0;
    for (int i = 0; i < kSegments; ++i) {
      value += width[i] / (1.0 + slope[i] * slope[i]);
    }
    best = std::min(best, value);
  }
  return best;
}

}  // namespace newtres
