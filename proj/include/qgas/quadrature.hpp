#pragma once

// Numerical integration on finite intervals.
//
// Two rules are provided:
//   * adaptive Gauss-Kronrod (7/15) with global subdivision, for smooth or
//     mildly singular integrands with localized features;
//   * tanh-sinh (double exponential), for integrands with algebraic endpoint
//     singularities such as (b - x)^{-1/2}.

#include <algorithm>
#include <array>
#include <type_traits>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <queue>
#include <span>
#include <sstream>
#include <vector>

#include "qgas/errors.hpp"

namespace qgas::quad {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  std::size_t evaluations = 0;
};

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the embedded 7-point rule (nodes kKronrodNodes[1,3,5,7]).
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment kronrod15(F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  double abs_sum = std::abs(kronrod);
  std::array<double, 15> fv{};
  fv[7] = fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double f1 = f(centre - dx);
    const double f2 = f(centre + dx);
    fv[j] = f1;
    fv[14 - j] = f2;
    kronrod += kKronrodWeights[j] * (f1 + f2);
    abs_sum += kKronrodWeights[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * (f1 + f2);
  }
  const double mean = 0.5 * kronrod;
  double asc = kKronrodWeights[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j)
    asc += kKronrodWeights[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));

  double err = std::abs((kronrod - gauss) * half);
  asc *= std::abs(half);
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  const double resabs = abs_sum * std::abs(half);
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
    err = std::max(err, 50.0 * eps * resabs);
  return {a, b, kronrod * half, err};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod over consecutive panels [p0,p1], [p1,p2], ...
/// Subdivides the worst panel until the summed error estimate drops below
/// max(abs_tol, rel_tol * |result|). Throws QuadratureError when the
/// interval budget is exhausted.
template <class F>
QuadResult gauss_kronrod(F&& f, std::span<const double> points, double abs_tol, double rel_tol,
                         std::size_t max_intervals = 4000) {
  if (points.size() < 2) throw DomainError("gauss_kronrod: need at least two points");
  std::priority_queue<detail::Segment> heap;
  QuadResult out;
  double total = 0.0, total_err = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (!(points[i + 1] >= points[i])) throw DomainError("gauss_kronrod: points must be ascending");
    if (points[i + 1] == points[i]) continue;
    auto seg = detail::kronrod15(f, points[i], points[i + 1]);
    out.evaluations += 15;
    total += seg.value;
    total_err += seg.error;
    heap.push(seg);
  }
  while (!heap.empty() && total_err > std::max(abs_tol, rel_tol * std::abs(total))) {
    if (heap.size() >= max_intervals) {
      std::ostringstream msg;
      msg << "gauss_kronrod: tolerance not met within " << max_intervals
          << " intervals (estimate " << total << ", error " << total_err << ")";
      throw QuadratureError(msg.str());
    }
    const auto worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Interval cannot be split further in double precision.
      throw QuadratureError("gauss_kronrod: interval underflow before tolerance was met");
    }
    heap.pop();
    auto left = detail::kronrod15(f, worst.a, mid);
    auto right = detail::kronrod15(f, mid, worst.b);
    out.evaluations += 30;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed accumulated cancellation from the running updates.
  total = 0.0;
  total_err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    total_err += heap.top().error;
    heap.pop();
  }
  out.value = total;
  out.error = total_err;
  return out;
}

template <class F>
QuadResult gauss_kronrod(F&& f, double a, double b, double abs_tol, double rel_tol,
                         std::size_t max_intervals = 4000) {
  const std::array<double, 2> pts{a, b};
  return gauss_kronrod(std::forward<F>(f), std::span<const double>(pts), abs_tol, rel_tol,
                       max_intervals);
}

/// Tanh-sinh quadrature on [a, b]. The integrand is never evaluated at the
/// endpoints, so integrable singularities there are allowed. Refines the step
/// by halving until two successive levels agree to rel_tol.
///
/// f may be called as f(x) or, when it accepts three doubles, as
/// f(x, x - a, b - x) with both distances computed without cancellation.
/// The second form lets a singular factor such as (b - x)^{-1/2} be
/// evaluated accurately next to the endpoint.
template <class F>
QuadResult tanh_sinh(F&& f, double a, double b, double rel_tol = 1e-12, int max_level = 12) {
  if (!(b >= a)) throw DomainError("tanh_sinh: require a <= b");
  QuadResult out;
  if (a == b) return out;
  constexpr double half_pi = 0.5 * std::numbers::pi;
  constexpr double t_max = 6.5;
  const double half = 0.5 * (b - a);
  const double width = b - a;
  auto eval = [&](double x, double from_a, double to_b) {
    if constexpr (std::is_invocable_v<F&, double, double, double>) {
      return f(x, from_a, to_b);
    } else {
      (void)from_a;
      (void)to_b;
      return f(x);
    }
  };

  // Sum of weight*f over the nodes k*h (k odd when only_odd), both sides of the centre.
  auto sweep = [&](double h, bool only_odd, double scale) {
    double sum = 0.0;
    int small_run = 0;
    const int step = only_odd ? 2 : 1;
    for (int k = only_odd ? 1 : 0; k * h <= t_max; k += step) {
      const double t = k * h;
      const double u = half_pi * std::sinh(t);
      const double cu = std::cosh(u);
      const double w = half_pi * std::cosh(t) / (cu * cu);
      if (!(w > 0.0)) break;
      // Distance of the node from the nearer endpoint, in units of half.
      const double c = 1.0 / (std::exp(u) * cu);
      const double xl = a + half * c;
      const double xr = b - half * c;
      double term = 0.0;
      if (k == 0) {
        term = w * eval(a + half, half, half);
        ++out.evaluations;
      } else {
        // With distance arguments the node is usable as long as its offset
        // is nonzero, even if x itself rounds onto the endpoint.
        constexpr bool with_distance = std::is_invocable_v<F&, double, double, double>;
        const double offset = half * c;
        if (with_distance ? offset > 0.0 : (xl > a && xl < b)) {
          term += w * eval(xl, offset, width - offset);
          ++out.evaluations;
        }
        if (with_distance ? offset > 0.0 : (xr < b && xr > a)) {
          term += w * eval(xr, width - offset, offset);
          ++out.evaluations;
        }
      }
      sum += term;
      if (std::abs(term) <= 1e-20 * (std::abs(sum) + scale)) {
        if (++small_run >= 3 && k > 0) break;
      } else {
        small_run = 0;
      }
    }
    return sum;
  };

  double h = 1.0;
  double sum = sweep(h, false, 0.0);
  double estimate = sum * h;
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    sum += sweep(h, true, std::abs(sum));
    const double next = sum * h;
    const double diff = std::abs(next - estimate);
    estimate = next;
    if (level >= 3 && (diff <= rel_tol * std::abs(next) || (next == 0.0 && diff == 0.0))) {
      out.value = estimate * half;
      out.error = diff * half;
      return out;
    }
  }
  std::ostringstream msg;
  msg << "tanh_sinh: tolerance " << rel_tol << " not met after " << max_level
      << " levels (estimate " << estimate * half << ")";
  throw QuadratureError(msg.str());
}

}  // namespace qgas::quad
