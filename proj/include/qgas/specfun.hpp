#pragma once

// Special functions for ideal quantum gases:
//   Fermi function  f_s(z) = -Li_s(-z),  Bose function  g_s(z) = Li_s(z),
//   Gamma and Riemann zeta.
//
// f and g are evaluated from the power series for z <= 0.5 and from the
// integral representation
//     h_s(z) = 1/Gamma(s) * int_0^inf y^{s-1} / (e^{y - ln z} +- 1) dy
// otherwise. The *_log variants take x = ln z directly so that strongly
// degenerate Fermi gases (z = e^{1000}) do not overflow.

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qgas/errors.hpp"
#include "qgas/quadrature.hpp"

namespace qgas::specfun {

inline double gamma_fn(double x) {
  if (!(x > 0.0)) throw DomainError("gamma_fn: argument must be > 0, got " + std::to_string(x));
  const double g = std::tgamma(x);
  if (!std::isfinite(g)) throw OverflowError("gamma_fn: result overflows for x = " + std::to_string(x));
  return g;
}

/// Riemann zeta for s > 1 via the Dirichlet eta series with Borwein's
/// acceleration: eta(s) = -1/d_n sum_{k<n} (-1)^k (d_k - d_n) / (k+1)^s,
/// zeta(s) = eta(s) / (1 - 2^{1-s}). Truncation error ~ 3 / (3 + sqrt 8)^n.
inline double riemann_zeta(double s) {
  if (!(s > 1.0)) {
    std::ostringstream msg;
    msg << "riemann_zeta: requires s > 1 (zeta diverges at s = 1), got s = " << s;
    throw DomainError(msg.str());
  }
  // Beyond s = 60 the series 1 + 2^-s + ... is exact in double precision.
  if (s > 60.0) return 1.0 + std::exp2(-s) + std::pow(3.0, -s);

  constexpr int n = 40;
  std::array<double, n + 1> d{};
  double term = 1.0 / n;  // (n+i-1)! 4^i / ((n-i)! (2i)!) at i = 0
  double acc = term;
  d[0] = n * acc;
  for (int i = 1; i <= n; ++i) {
    term *= 4.0 * (n + i - 1) * (n - i + 1) / ((2.0 * i - 1) * (2.0 * i));
    acc += term;
    d[i] = n * acc;
  }
  double eta = 0.0;
  for (int k = n - 1; k >= 0; --k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    eta += sign * (d[k] - d[n]) * std::pow(k + 1.0, -s);
  }
  eta = -eta / d[n];
  // 1 - 2^{1-s} without cancellation near s = 1.
  const double denom = -std::expm1((1.0 - s) * std::numbers::ln2);
  return eta / denom;
}

namespace detail {

inline constexpr double kSeriesCut = 0.5;

inline void check_order(double s, const char* who) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    std::ostringstream msg;
    msg << who << ": order must be finite and > 0, got s = " << s;
    throw DomainError(msg.str());
  }
}

/// sum_{i>=1} sign^{i+1} z^i / i^s, truncated once a term is below
/// 1e-17 of the running sum. Intended for 0 <= z <= 0.5.
inline double polylog_series(double s, double z, bool alternating) {
  if (z == 0.0) return 0.0;
  double sum = 0.0;
  double zi = 1.0;
  for (int i = 1; i < 100000; ++i) {
    zi *= z;
    const double term = zi * std::pow(static_cast<double>(i), -s);
    sum += (alternating && i % 2 == 0) ? -term : term;
    if (term < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

/// Leading power a used by the substitution y = t^{1/a} on [0, 1].
/// It removes the y^{s-1} factor (and, for Bose near z = 1, the
/// additional 1/y from the pole of the occupation).
inline double substitution_power(double s, bool bose) {
  if (s < 1.0) return s;
  if (bose && s < 2.0 && s > 1.0) return s - 1.0;
  return 1.0;
}

/// int_0^inf y^{s-1} / (e^{y-x} +- 1) dy by adaptive Gauss-Kronrod.
/// For Bose x must be < 0.
inline double occupation_integral(double s, double x, bool bose) {
  auto occupation = [x, bose](double y) {
    const double e = y - x;
    if (bose) return 1.0 / std::expm1(e);
    if (e > 0.0) {
      const double q = std::exp(-e);
      return q / (1.0 + q);
    }
    return 1.0 / (std::exp(e) + 1.0);
  };

  const double peak = std::max(x, 0.0);
  const double y_max = peak + 50.0 + 2.0 * s * std::log(2.0 + s + peak);
  constexpr double rel_tol = 2e-13;
  constexpr double abs_floor = 1e-300;

  double total = 0.0;
  // [0, 1] with the power substitution.
  const double a = substitution_power(s, bose);
  auto near_origin = [&](double t) {
    if (t <= 0.0) {
      // Limit of the transformed integrand at t = 0.
      if (a == s && !bose) return occupation(0.0) / a;
      return 0.0;
    }
    const double y = std::pow(t, 1.0 / a);
    // y^{s-1} dy = (1/a) t^{s/a - 1} dt
    return std::pow(t, s / a - 1.0) * occupation(y) / a;
  };
  const double nearest = quad::gauss_kronrod(near_origin, 0.0, 1.0, abs_floor, rel_tol).value;

  auto direct = [&](double y) { return std::pow(y, s - 1.0) * occupation(y); };
  std::vector<double> pts{1.0};
  if (peak > 1.0) {
    // Resolve the Fermi step, whose width is one unit of y around y = x.
    for (double p : {peak - 8.0, peak, peak + 8.0})
      if (p > pts.back()) pts.push_back(p);
  }
  if (y_max > pts.back()) pts.push_back(y_max);
  const double rest = quad::gauss_kronrod(direct, std::span<const double>(pts), abs_floor,
                                          rel_tol, 20000)
                          .value;
  total = nearest + rest;
  return total;
}

}  // namespace detail

/// Bose function g_s(z) from x = ln z, x <= 0. x = 0 gives zeta(s).
inline double bose_fn_log(double s, double log_z) {
  detail::check_order(s, "bose_fn");
  if (std::isnan(log_z) || log_z > 0.0) {
    std::ostringstream msg;
    msg << "bose_fn: fugacity must satisfy 0 <= z <= 1 (mu <= 0), got ln z = " << log_z;
    throw DomainError(msg.str());
  }
  if (log_z == 0.0) {
    if (!(s > 1.0)) {
      std::ostringstream msg;
      msg << "bose_fn: g_s(1) diverges for s <= 1, got s = " << s;
      throw DomainError(msg.str());
    }
    return riemann_zeta(s);
  }
  if (log_z == -std::numeric_limits<double>::infinity()) return 0.0;
  if (log_z <= std::log(detail::kSeriesCut))
    return detail::polylog_series(s, std::exp(log_z), false);
  return detail::occupation_integral(s, log_z, true) / gamma_fn(s);
}

inline double bose_fn(double s, double z) {
  detail::check_order(s, "bose_fn");
  if (!(z >= 0.0 && z <= 1.0)) {
    std::ostringstream msg;
    msg << "bose_fn: fugacity must satisfy 0 <= z <= 1, got z = " << z;
    throw DomainError(msg.str());
  }
  if (z == 0.0) return 0.0;
  if (z <= detail::kSeriesCut) return detail::polylog_series(s, z, false);
  return bose_fn_log(s, std::log(z));
}

/// Fermi function f_s(z) from x = ln z; any real x.
inline double fermi_fn_log(double s, double log_z) {
  detail::check_order(s, "fermi_fn");
  if (std::isnan(log_z) || log_z == std::numeric_limits<double>::infinity())
    throw DomainError("fermi_fn: ln z must be finite");
  if (log_z == -std::numeric_limits<double>::infinity()) return 0.0;
  if (log_z <= std::log(detail::kSeriesCut))
    return detail::polylog_series(s, std::exp(log_z), true);
  return detail::occupation_integral(s, log_z, false) / gamma_fn(s);
}

inline double fermi_fn(double s, double z) {
  detail::check_order(s, "fermi_fn");
  if (!(z >= 0.0) || std::isinf(z)) {
    std::ostringstream msg;
    msg << "fermi_fn: fugacity must be finite and >= 0, got z = " << z;
    throw DomainError(msg.str());
  }
  if (z == 0.0) return 0.0;
  if (z <= detail::kSeriesCut) return detail::polylog_series(s, z, true);
  return fermi_fn_log(s, std::log(z));
}

/// Representation-specific entry points, exposed so the series and integral
/// routes can be compared against each other on their overlap.
inline double fermi_fn_series(double s, double z) {
  detail::check_order(s, "fermi_fn_series");
  if (!(z >= 0.0 && z < 1.0)) throw DomainError("fermi_fn_series: requires 0 <= z < 1");
  return detail::polylog_series(s, z, true);
}

inline double fermi_fn_integral(double s, double z) {
  detail::check_order(s, "fermi_fn_integral");
  if (!(z > 0.0)) throw DomainError("fermi_fn_integral: requires z > 0");
  return detail::occupation_integral(s, std::log(z), false) / gamma_fn(s);
}

inline double bose_fn_integral(double s, double z) {
  detail::check_order(s, "bose_fn_integral");
  if (!(z > 0.0 && z < 1.0)) throw DomainError("bose_fn_integral: requires 0 < z < 1");
  return detail::occupation_integral(s, std::log(z), true) / gamma_fn(s);
}

}  // namespace qgas::specfun
