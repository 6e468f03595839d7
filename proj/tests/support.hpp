#pragma once

// Shared test helpers: independent reference routines and a seeded sampler.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

namespace qgas_test {

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

/// sum_{i>=1} (-1)^{i+1} z^i / i^s, summed directly for 0 <= z < 1.
inline double alternating_series(double s, double z) {
  double sum = 0.0;
  double zi = 1.0;
  for (int i = 1; i < 100000; ++i) {
    zi *= z;
    const double term = zi / std::pow(i, s);
    sum += (i % 2 == 1) ? term : -term;
    if (term < 1e-19) break;
  }
  return sum;
}

/// sum_{i>=1} z^i / i^s for 0 <= z < 1.
inline double power_series(double s, double z) {
  double sum = 0.0;
  double zi = 1.0;
  for (int i = 1; i < 10000000; ++i) {
    zi *= z;
    const double term = zi / std::pow(i, s);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

/// zeta(s), s > 1: 2000 explicit terms plus the Euler-Maclaurin tail.
inline double zeta_euler_maclaurin(double s) {
  constexpr int n = 2000;
  double head = 0.0;
  for (int k = n - 1; k >= 1; --k) head += std::pow(k, -s);
  const double nn = n;
  const double tail = std::pow(nn, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(nn, -s) +
                      s * std::pow(nn, -s - 1.0) / 12.0 -
                      s * (s + 1.0) * (s + 2.0) * std::pow(nn, -s - 3.0) / 720.0;
  return head + tail;
}

/// Reproducible uniform sampler for hand-rolled property tests.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qgas_test
