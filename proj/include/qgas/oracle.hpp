#pragma once

// Brute-force verifiers that do not go through the Fermi/Bose functions:
// direct phase-space quadrature of the occupation, phase-space volume of the
// energy shell, and exact grand-canonical sums over the discrete harmonic
// spectrum.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qgas/errors.hpp"
#include "qgas/quadrature.hpp"
#include "qgas/thermo.hpp"
#include "qgas/trap.hpp"

namespace qgas::oracle {

/// Closed-form value next to its independent oracle.
struct OracleReport {
  std::string name;
  double closed_form = 0.0;
  double oracle = 0.0;
  double tolerance = 0.0;  // relative

  double abs_error() const { return std::abs(closed_form - oracle); }
  double rel_error() const {
    const double scale = std::max(std::abs(closed_form), std::abs(oracle));
    return scale == 0.0 ? 0.0 : abs_error() / scale;
  }
  bool passed() const { return rel_error() <= tolerance; }
};

namespace detail {

inline double occupation(Statistics stats, double excess_over_t) {
  if (stats == Statistics::fermi) {
    if (excess_over_t > 0.0) {
      const double q = std::exp(-excess_over_t);
      return q / (1.0 + q);
    }
    return 1.0 / (std::exp(excess_over_t) + 1.0);
  }
  return 1.0 / std::expm1(excess_over_t);
}

}  // namespace detail

/// N = int d^Dr d^Dp / (2 pi hbar)^D  1 / (e^{(p^2/2m + U(r) - mu)/T} +- 1),
/// reduced to nested radial integrals with momentum innermost. The spatial
/// cutoff sits where e^{(mu - U)/T} < 1e-18.
inline double phase_space_number_oracle(const GasSpec& gas, const ThermoState& state, double rel_tol = 1e-11) {
  const Trap& trap = gas.trap;
  if (trap.is_box()) throw DomainError("phase_space_number_oracle: finite exponent required");
  if (!(state.temperature > 0.0)) throw DomainError("phase_space_number_oracle: T must be > 0");
  if (gas.statistics == Statistics::bose && state.mu > 0.0)
    throw DomainError("BOSE requires mu <= 0");
  const double d = trap.dim();
  const double m = trap.mass();
  const double t = state.temperature;
  const double mu = state.mu;

  auto inner = [&](double r) {
    const double u = trap.potential(r);
    auto integrand = [&](double p) {
      const double e = p * p / (2.0 * m) + u - mu;
      return std::pow(p, d - 1.0) * detail::occupation(gas.statistics, e / t);
    };
    const double p_cut = std::sqrt(2.0 * m * (std::max(mu - u, 0.0) + 45.0 * t));
    double sum = 0.0;
    double start = 0.0;
    if (mu > u) {
      const double p_fermi = std::sqrt(2.0 * m * (mu - u));
      sum += quad::tanh_sinh(integrand, 0.0, p_fermi, rel_tol).value;
      start = p_fermi;
    }
    sum += quad::tanh_sinh(integrand, start, p_cut, rel_tol).value;
    return std::pow(r, d - 1.0) * sum;
  };

  const double r_cut = trap.turning_radius(std::max(mu, 0.0) + 45.0 * t);
  double outer = 0.0;
  double start = 0.0;
  if (mu > 0.0) {
    const double r_fermi = trap.turning_radius(mu);
    outer += quad::tanh_sinh(inner, 0.0, r_fermi, rel_tol).value;
    start = r_fermi;
  }
  outer += quad::tanh_sinh(inner, start, r_cut, rel_tol).value;
  const double s = sphere_surface(d);
  return s * s * outer / std::pow(2.0 * std::numbers::pi * trap.hbar(), d);
}

/// Phase-space volume of {p^2/2m + U(r) <= eps} over (2 pi hbar)^D, i.e. the
/// number of states below eps, by nested quadrature of the indicator.
inline double counting_function_oracle(const Trap& trap, double energy, double rel_tol = 1e-12) {
  if (trap.is_box()) throw DomainError("counting_function_oracle: finite exponent required");
  if (!(energy > 0.0)) throw DomainError("counting_function_oracle: energy must be > 0");
  const double d = trap.dim();
  auto inner = [&](double r) {
    const double gap = energy - trap.potential(r);
    if (!(gap > 0.0)) return 0.0;
    const double p_max = std::sqrt(2.0 * trap.mass() * gap);
    auto shell = [d](double p) { return std::pow(p, d - 1.0); };
    return std::pow(r, d - 1.0) * quad::tanh_sinh(shell, 0.0, p_max, rel_tol).value;
  };
  const double radial = quad::tanh_sinh(inner, 0.0, trap.turning_radius(energy), rel_tol).value;
  const double s = sphere_surface(d);
  return s * s * radial / std::pow(2.0 * std::numbers::pi * trap.hbar(), d);
}

struct DiscreteSum {
  double value = 0.0;
  long terms = 0;
};

/// Exact thermal number of the isotropic D-dimensional oscillator,
///   sum_k C(k+D-1, D-1) / (e^{(hbar w (k + D/2) - mu)/T} +- 1),
/// truncated once a geometric bound on the tail is below 1e-12 of the sum.
inline DiscreteSum discrete_harmonic_oracle(Statistics stats, int dim, double omega, double temperature,
                                            double mu, double hbar = 1.0) {
  if (dim < 1) throw DomainError("discrete_harmonic_oracle: D must be >= 1");
  if (!(omega > 0.0) || !(temperature > 0.0)) throw DomainError("discrete_harmonic_oracle: omega, T must be > 0");
  const double quantum = hbar * omega;
  if (stats == Statistics::bose && !(mu < 0.5 * dim * quantum))
    throw DomainError("BOSE requires mu below the ground-state energy D hbar w / 2");
  const double step = quantum / temperature;
  const double q = std::exp(-step);

  DiscreteSum out;
  double degeneracy = 1.0;
  constexpr long kMaxTerms = 100000000;
  for (long k = 0; k < kMaxTerms; ++k) {
    const double excess = (quantum * (k + 0.5 * dim) - mu) / temperature;
    const double term = degeneracy * detail::occupation(stats, excess);
    out.value += term;
    out.terms = k + 1;
    const double next_degeneracy = degeneracy * (k + dim) / (k + 1.0);
    // Ratio of successive terms is bounded by (deg_{k+1}/deg_k) q (1 + e^{-excess})
    // for Fermi and (deg_{k+1}/deg_k) q for Bose; both bounds shrink with k.
    double ratio = next_degeneracy / degeneracy * q;
    if (stats == Statistics::fermi) ratio *= 1.0 + std::exp(-excess);
    if (ratio < 1.0 && term * ratio / (1.0 - ratio) < 1e-12 * out.value) break;
    degeneracy = next_degeneracy;
  }
  return out;
}

/// Semiclassical number for the same oscillator, via total_number with A = m w^2 / 2.
inline double semiclassical_harmonic_number(Statistics stats, int dim, double omega, double temperature,
                                            double mu, double hbar = 1.0) {
  const Trap trap = harmonic_trap(dim, omega, 1.0, hbar);
  return total_number(stats, trap, {temperature, mu});
}

/// Compact cross-check suite used by `qgas verify`.
inline std::vector<OracleReport> run_verification_suite() {
  std::vector<OracleReport> out;
  auto label = [](std::string_view what, Statistics s, double d, double n, double t, double mu) {
    std::ostringstream os;
    os << what << "[" << to_string(s) << " D=" << d << " n=" << n << " T=" << t << " mu=" << mu << "]";
    return os.str();
  };

  for (double d : {1.0, 2.0, 3.0})
    for (double n : {1.0, 2.0, 4.0}) {
      const Trap trap = Trap::power_law(d, n, 1.0);
      const double eps = 2.0;
      std::ostringstream os;
      os << "dos_quadrature[D=" << d << " n=" << n << " eps=" << eps << "]";
      out.push_back({os.str(), dos_closed_form(trap, eps), dos_quadrature(trap, eps), 1e-7});
      std::ostringstream oc;
      oc << "counting_function[D=" << d << " n=" << n << " eps=" << eps << "]";
      out.push_back({oc.str(), density_of_states(trap).counting(eps), counting_function_oracle(trap, eps), 1e-7});
    }

  struct Point {
    Statistics stats;
    double d, n, t, mu;
  };
  const Point points[] = {
      {Statistics::fermi, 3, 2, 1.0, 0.0},  {Statistics::fermi, 3, 2, 0.5, 1.0},
      {Statistics::fermi, 1, 1, 2.0, -1.0}, {Statistics::fermi, 2, 4, 0.5, 1.0},
      {Statistics::bose, 3, 2, 1.0, -0.5},  {Statistics::bose, 2, 1, 1.0, -0.1},
      {Statistics::bose, 1, 4, 2.0, -1.0},  {Statistics::bose, 3, 2, 1.0, 0.0},
  };
  for (const auto& pt : points) {
    const GasSpec gas{pt.stats, 1.0, Trap::power_law(pt.d, pt.n, 1.0)};
    const ThermoState state{pt.t, pt.mu};
    out.push_back({label("phase_space_number", pt.stats, pt.d, pt.n, pt.t, pt.mu), total_number(gas, state),
                   phase_space_number_oracle(gas, state), 1e-7});
  }

  for (Statistics s : {Statistics::fermi, Statistics::bose}) {
    const double bw = 0.05;
    const double t = 1.0 / bw;
    std::ostringstream os;
    os << "discrete_harmonic[" << to_string(s) << " D=3 beta*hbar*w=" << bw << " mu/T=-1]";
    out.push_back({os.str(), semiclassical_harmonic_number(s, 3, 1.0, t, -t),
                   discrete_harmonic_oracle(s, 3, 1.0, t, -t).value, 0.1});
  }
  return out;
}

}  // namespace qgas::oracle
