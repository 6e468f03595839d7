#pragma once

// Semiclassical thermodynamics of ideal Fermi and Bose gases in power-law
// traps: density profiles, Fermi energy, BEC temperature, condensed fraction
// and the chemical potential fixed by the particle number.
//
// Units: k_B = 1, so temperatures are energies. hbar and m come from the Trap.

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qgas/errors.hpp"
#include "qgas/quadrature.hpp"
#include "qgas/specfun.hpp"
#include "qgas/trap.hpp"

namespace qgas {

enum class Statistics { fermi, bose };

inline std::string_view to_string(Statistics s) { return s == Statistics::fermi ? "fermi" : "bose"; }

/// Temperature and chemical potential. Fugacity z = e^{mu/T}.
struct ThermoState {
  double temperature = 1.0;
  double mu = 0.0;

  double beta() const { return 1.0 / temperature; }
  double log_fugacity() const { return mu / temperature; }
  double fugacity() const { return std::exp(log_fugacity()); }
};

struct GasSpec {
  Statistics statistics = Statistics::fermi;
  double particles = 1.0;
  Trap trap = Trap::box(3.0);
};

/// Split of N into the ground-state (condensed) and thermal parts.
struct CondensateSplit {
  double condensed = 0.0;
  double thermal = 0.0;
  std::optional<double> bec_temperature;

  double total() const { return condensed + thermal; }
  double fraction() const { return condensed / total(); }
};

struct MuSolution {
  ThermoState state;
  std::optional<CondensateSplit> split;  // set for Bose gases only
};

namespace detail {

inline void check_gas(const GasSpec& gas) {
  if (!(gas.particles > 0.0) || !std::isfinite(gas.particles))
    throw DomainError("particle number N must be finite and > 0");
}

inline void check_state(Statistics stats, const ThermoState& state) {
  if (!(state.temperature > 0.0) || !std::isfinite(state.temperature))
    throw DomainError("temperature T must be finite and > 0");
  if (!std::isfinite(state.mu)) throw DomainError("chemical potential mu must be finite");
  if (stats == Statistics::bose && state.mu > 0.0) {
    std::ostringstream msg;
    msg << "BOSE requires mu <= 0 (got mu = " << state.mu << ")";
    throw DomainError(msg.str());
  }
}

/// f_s or g_s evaluated from ln z. Order 0 is the bare occupation z/(1 +- z).
inline double quantum_fn(Statistics stats, double order, double log_z) {
  if (order == 0.0) {
    if (log_z == -std::numeric_limits<double>::infinity()) return 0.0;
    if (stats == Statistics::fermi) return 1.0 / (std::exp(-log_z) + 1.0);
    if (log_z >= 0.0) throw DomainError("BOSE requires z < 1 for the zero-order occupation");
    return 1.0 / std::expm1(-log_z);
  }
  return stats == Statistics::fermi ? specfun::fermi_fn_log(order, log_z)
                                    : specfun::bose_fn_log(order, log_z);
}

}  // namespace detail

/// Thermal de Broglie wavelength (2 pi hbar^2 / (m T))^{1/2}.
inline double thermal_wavelength(double temperature, double mass = 1.0, double hbar = 1.0) {
  if (!(temperature > 0.0)) throw DomainError("thermal_wavelength: T must be > 0");
  if (!(mass > 0.0)) throw DomainError("thermal_wavelength: mass must be > 0");
  return std::sqrt(2.0 * std::numbers::pi * hbar * hbar / (mass * temperature));
}

inline bool bec_feasible(double dim, std::optional<double> exponent) {
  if (!(dim > 0.0)) throw DomainError("bec_feasible: D must be > 0");
  if (exponent && !(*exponent > 0.0)) throw DomainError("bec_feasible: n must be > 0");
  const double g = 0.5 * dim + (exponent ? dim / *exponent : 0.0);
  return g > 1.0;
}

inline bool bec_feasible(const Trap& trap) { return trap.gamma() > 1.0; }

/// Prefactor C in N = C T^gamma h_gamma(z):
///   C = (m/2hbar^2)^{D/2} A^{-D/n} Gamma(D/n+1) / Gamma(D/2+1).
inline double number_prefactor(const Trap& trap) {
  using specfun::gamma_fn;
  const double d = trap.dim();
  const double dn = trap.dim_over_exponent();
  const double kinetic = std::pow(trap.mass() / (2.0 * trap.hbar() * trap.hbar()), 0.5 * d);
  const double strength = trap.is_box() ? 1.0 : std::pow(trap.strength(), -dn);
  return kinetic * strength * gamma_fn(dn + 1.0) / gamma_fn(0.5 * d + 1.0);
}

/// Thermal (non-condensed for Bose) particle number at (T, mu).
inline double total_number(Statistics stats, const Trap& trap, const ThermoState& state) {
  detail::check_state(stats, state);
  const double g = trap.gamma();
  return number_prefactor(trap) * std::pow(state.temperature, g) *
         detail::quantum_fn(stats, g, state.log_fugacity());
}

inline double total_number(const GasSpec& gas, const ThermoState& state) {
  return total_number(gas.statistics, gas.trap, state);
}

/// Temperature at which C T^gamma equals N; the scale where the gas turns degenerate.
inline double characteristic_temperature(const GasSpec& gas) {
  detail::check_gas(gas);
  return std::pow(gas.particles / number_prefactor(gas.trap), 1.0 / gas.trap.gamma());
}

// ---------------------------------------------------------------- profiles

/// n(r) = lambda^{-D} h_{D/2}(e^{(mu - U(r))/T}); for Bose only the thermal cloud.
inline double spatial_density(const GasSpec& gas, const ThermoState& state, double r) {
  detail::check_state(gas.statistics, state);
  const Trap& trap = gas.trap;
  const double u = trap.potential(r);
  if (std::isinf(u)) return 0.0;
  const double lambda = thermal_wavelength(state.temperature, trap.mass(), trap.hbar());
  const double log_z = (state.mu - u) / state.temperature;
  return std::pow(lambda, -trap.dim()) * detail::quantum_fn(gas.statistics, 0.5 * trap.dim(), log_z);
}

/// Zero-temperature Fermi cloud
///   n(r) = (m/2 pi hbar^2)^{D/2} (E_F - U(r))^{D/2} Theta(E_F - U(r)) / Gamma(D/2+1).
inline double fermi_spatial_density_T0(const GasSpec& gas, double fermi_energy, double r) {
  if (!(fermi_energy > 0.0)) throw DomainError("Fermi energy must be > 0");
  const Trap& trap = gas.trap;
  const double gap = fermi_energy - trap.potential(r);
  if (!(gap > 0.0)) return 0.0;
  const double d = trap.dim();
  return std::pow(trap.mass() / (2.0 * std::numbers::pi * trap.hbar() * trap.hbar()), 0.5 * d) *
         std::pow(gap, 0.5 * d) / specfun::gamma_fn(0.5 * d + 1.0);
}

namespace detail {
inline double momentum_prefactor(const Trap& trap) {
  const double d = trap.dim();
  return std::pow(2.0 * trap.hbar() * std::sqrt(std::numbers::pi), -d) /
         specfun::gamma_fn(0.5 * d + 1.0);
}
}  // namespace detail

/// n(p) = (2 hbar sqrt(pi))^{-D} Gamma(D/n+1)/Gamma(D/2+1) (T/A)^{D/n} h_{D/n}(e^{(mu - p^2/2m)/T}).
/// The box (D/n = 0) reduces to V_D / (2 pi hbar)^D times the occupation.
inline double momentum_density(const GasSpec& gas, const ThermoState& state, double p) {
  detail::check_state(gas.statistics, state);
  if (!(p >= 0.0)) throw DomainError("momentum must be >= 0");
  const Trap& trap = gas.trap;
  const double dn = trap.dim_over_exponent();
  const double kinetic = p * p / (2.0 * trap.mass());
  const double log_z = (state.mu - kinetic) / state.temperature;
  double pref = detail::momentum_prefactor(trap) * specfun::gamma_fn(dn + 1.0);
  if (!trap.is_box()) pref *= std::pow(state.temperature / trap.strength(), dn);
  return pref * detail::quantum_fn(gas.statistics, dn, log_z);
}

/// Zero-temperature Fermi momentum distribution
///   n(p) = (2 hbar sqrt(pi))^{-D} / Gamma(D/2+1) A^{-D/n} (E_F - p^2/2m)^{D/n} Theta(E_F - p^2/2m).
/// The 1/Gamma(D/2+1) factor is the T -> 0 limit of momentum_density and is
/// required for the distribution to integrate to N.
inline double fermi_momentum_density_T0(const GasSpec& gas, double fermi_energy, double p) {
  if (!(fermi_energy > 0.0)) throw DomainError("Fermi energy must be > 0");
  if (!(p >= 0.0)) throw DomainError("momentum must be >= 0");
  const Trap& trap = gas.trap;
  const double gap = fermi_energy - p * p / (2.0 * trap.mass());
  if (!(gap > 0.0)) return 0.0;
  const double dn = trap.dim_over_exponent();
  double value = detail::momentum_prefactor(trap);
  if (!trap.is_box()) value *= std::pow(trap.strength(), -dn) * std::pow(gap, dn);
  return value;
}

// --------------------------------------------------------- box (U = 0) limit

/// E_F = (2 pi hbar^2 / m) [Gamma(D/2+1) n]^{2/D} for a homogeneous gas of density n.
inline double box_fermi_energy(double dim, double density, double mass = 1.0, double hbar = 1.0) {
  if (!(dim > 0.0)) throw DomainError("box_fermi_energy: D must be > 0");
  if (!(density > 0.0)) throw DomainError("box_fermi_energy: density must be > 0");
  return 2.0 * std::numbers::pi * hbar * hbar / mass *
         std::pow(specfun::gamma_fn(0.5 * dim + 1.0) * density, 2.0 / dim);
}

/// T_B = (2 pi hbar^2 / m) (n / zeta(D/2))^{2/D}; absent for D <= 2.
inline std::optional<double> box_bec_temperature(double dim, double density, double mass = 1.0,
                                                 double hbar = 1.0) {
  if (!(dim > 0.0)) throw DomainError("box_bec_temperature: D must be > 0");
  if (!(density > 0.0)) throw DomainError("box_bec_temperature: density must be > 0");
  if (!(dim > 2.0)) return std::nullopt;
  return 2.0 * std::numbers::pi * hbar * hbar / mass *
         std::pow(density / specfun::riemann_zeta(0.5 * dim), 2.0 / dim);
}

// ------------------------------------------------------ critical quantities

/// E_F = [(2hbar^2/m)^{D/2} A^{D/n} Gamma(D/2+1)/Gamma(D/n+1) Gamma(D/2+D/n+1) N]^{1/(D/2+D/n)}.
/// A box trap uses the homogeneous result at density N / V_D.
inline double fermi_energy(const GasSpec& gas) {
  detail::check_gas(gas);
  if (gas.statistics != Statistics::fermi) throw DomainError("fermi_energy requires FERMI statistics");
  const Trap& trap = gas.trap;
  if (trap.is_box())
    return box_fermi_energy(trap.dim(), gas.particles / ball_volume(trap.dim()), trap.mass(), trap.hbar());
  using specfun::gamma_fn;
  const double d = trap.dim();
  const double dn = trap.dim_over_exponent();
  const double g = trap.gamma();
  const double inner = std::pow(2.0 * trap.hbar() * trap.hbar() / trap.mass(), 0.5 * d) *
                       std::pow(trap.strength(), dn) * gamma_fn(0.5 * d + 1.0) / gamma_fn(dn + 1.0) *
                       gamma_fn(g + 1.0) * gas.particles;
  return std::pow(inner, 1.0 / g);
}

/// kT_B = [(2hbar^2/m)^{D/2} A^{D/n} Gamma(D/2+1)/Gamma(D/n+1) N / zeta(D/2+D/n)]^{1/(D/2+D/n)},
/// or nothing when D/2 + D/n <= 1.
inline std::optional<double> bec_temperature(const GasSpec& gas) {
  detail::check_gas(gas);
  if (gas.statistics != Statistics::bose) throw DomainError("bec_temperature requires BOSE statistics");
  const Trap& trap = gas.trap;
  if (!bec_feasible(trap)) return std::nullopt;
  if (trap.is_box())
    return box_bec_temperature(trap.dim(), gas.particles / ball_volume(trap.dim()), trap.mass(),
                               trap.hbar());
  using specfun::gamma_fn;
  const double d = trap.dim();
  const double dn = trap.dim_over_exponent();
  const double g = trap.gamma();
  const double inner = std::pow(2.0 * trap.hbar() * trap.hbar() / trap.mass(), 0.5 * d) *
                       std::pow(trap.strength(), dn) * gamma_fn(0.5 * d + 1.0) / gamma_fn(dn + 1.0) *
                       gas.particles / specfun::riemann_zeta(g);
  return std::pow(inner, 1.0 / g);
}

/// N0/N = 1 - (T/T_B)^{gamma} below T_B, 0 above.
inline double condensed_fraction_ratio(double gamma, double t_over_tb) {
  if (!(gamma > 1.0)) throw FeasibilityError("BEC requires D/2 + D/n > 1");
  if (!(t_over_tb >= 0.0)) throw DomainError("T / T_B must be >= 0");
  if (t_over_tb >= 1.0) return 0.0;
  return 1.0 - std::pow(t_over_tb, gamma);
}

inline CondensateSplit condensed_fraction(const GasSpec& gas, double temperature) {
  detail::check_gas(gas);
  if (gas.statistics != Statistics::bose) throw DomainError("condensed_fraction requires BOSE statistics");
  if (!(temperature >= 0.0)) throw DomainError("temperature must be >= 0");
  const auto tb = bec_temperature(gas);
  if (!tb) {
    std::ostringstream msg;
    msg << "BEC requires D/2 + D/n > 1 (got " << gas.trap.gamma() << ")";
    throw FeasibilityError(msg.str());
  }
  condensed_fraction_ratio(gas.trap.gamma(), temperature / *tb);  // validates the ratio
  // Thermal part directly, so that it stays accurate for T << T_B.
  const double ratio = temperature / *tb;
  const double thermal = ratio >= 1.0 ? gas.particles : gas.particles * std::pow(ratio, gas.trap.gamma());
  return {gas.particles - thermal, thermal, tb};
}

// ------------------------------------------------------ chemical potential

namespace detail {

inline constexpr int kMaxBracketSteps = 200;
inline constexpr int kMaxBisections = 200;

}  // namespace detail

/// Chemical potential fixed by total_number(mu) = N.
///
/// Fermi: bisection on x = mu/T after geometric bracket expansion.
/// Bose: mu = 0 with a condensate when the thermal capacity C T^gamma zeta(gamma)
/// is below N; otherwise bisection on ln(-x) with x = ln z < 0.
inline MuSolution solve_mu(const GasSpec& gas, double temperature) {
  detail::check_gas(gas);
  if (!(temperature > 0.0) || !std::isfinite(temperature)) throw DomainError("solve_mu: T must be > 0");
  const Trap& trap = gas.trap;
  const double g = trap.gamma();
  const double target = gas.particles / (number_prefactor(trap) * std::pow(temperature, g));
  auto h = [&](double log_z) { return detail::quantum_fn(gas.statistics, g, log_z); };

  if (gas.statistics == Statistics::fermi) {
    double lo = -1.0, hi = 1.0;
    int steps = 0;
    while (h(lo) > target) {
      lo *= 2.0;
      if (++steps > detail::kMaxBracketSteps) throw ConvergenceError("solve_mu: lower bracket not found");
    }
    steps = 0;
    while (h(hi) < target) {
      hi *= 2.0;
      if (++steps > detail::kMaxBracketSteps) throw ConvergenceError("solve_mu: upper bracket not found");
    }
    for (int i = 0;; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(mid))) break;
      if (i >= detail::kMaxBisections) throw ConvergenceError("solve_mu: bisection did not converge");
      (h(mid) < target ? lo : hi) = mid;
    }
    return {{temperature, 0.5 * (lo + hi) * temperature}, std::nullopt};
  }

  const auto tb = bec_temperature(gas);
  if (bec_feasible(trap)) {
    const double thermal_capacity = specfun::riemann_zeta(g);
    if (thermal_capacity <= target) {
      const double thermal = gas.particles * thermal_capacity / target;
      return {{temperature, 0.0}, CondensateSplit{gas.particles - thermal, thermal, tb}};
    }
  }

  // Bracket u = ln(-ln z): h increases as u decreases.
  double u_lo = 0.0, u_hi = 0.0;  // h(-e^{u_lo}) >= target >= h(-e^{u_hi})
  auto hu = [&](double u) { return h(-std::exp(u)); };
  int steps = 0;
  while (hu(u_lo) < target) {
    u_lo -= std::max(1.0, std::abs(u_lo));
    if (++steps > detail::kMaxBracketSteps) {
      if (bec_feasible(trap)) throw ConvergenceError("solve_mu: bracket near z = 1 not found");
      throw NoSolutionError("solve_mu: thermal number saturates below N as z -> 1");
    }
  }
  steps = 0;
  while (hu(u_hi) > target) {
    u_hi += std::max(1.0, std::abs(u_hi));
    if (++steps > detail::kMaxBracketSteps) throw ConvergenceError("solve_mu: lower fugacity bracket not found");
  }
  for (int i = 0;; ++i) {
    if (u_hi - u_lo <= 1e-15 * std::max(1.0, std::abs(u_lo))) break;
    if (i >= detail::kMaxBisections) throw ConvergenceError("solve_mu: bisection did not converge");
    const double mid = 0.5 * (u_lo + u_hi);
    (hu(mid) > target ? u_lo : u_hi) = mid;
  }
  const double log_z = -std::exp(0.5 * (u_lo + u_hi));
  const ThermoState state{temperature, log_z * temperature};
  return {state, CondensateSplit{0.0, total_number(gas, state), tb}};
}

// ------------------------------------------------------------ harmonic traps

/// n = 2 trap with A = m wbar^2 / 2, wbar the geometric mean of the frequencies.
inline Trap harmonic_trap(double dim, std::span<const double> frequencies, double mass = 1.0,
                          double hbar = 1.0) {
  if (frequencies.empty()) throw DomainError("harmonic_trap: at least one frequency required");
  double log_sum = 0.0;
  for (double w : frequencies) {
    if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("harmonic_trap: frequencies must be > 0");
    log_sum += std::log(w);
  }
  const double wbar = std::exp(log_sum / static_cast<double>(frequencies.size()));
  return Trap::power_law(dim, 2.0, 0.5 * mass * wbar * wbar, mass, hbar);
}

inline Trap harmonic_trap(double dim, double frequency, double mass = 1.0, double hbar = 1.0) {
  return harmonic_trap(dim, std::span<const double>(&frequency, 1), mass, hbar);
}

// ------------------------------------------------------------------ profiles

/// Radial grid and density values with the full-space integral of the density.
struct Profile {
  std::vector<double> grid;
  std::vector<double> density;
  double normalization = 0.0;
};

/// S_D int r^{D-1} f(r) dr over consecutive panels, tanh-sinh on each.
template <class F>
double radial_integral(double dim, F&& f, std::span<const double> points, double rel_tol = 1e-12) {
  double sum = 0.0;
  auto integrand = [&](double r) { return std::pow(r, dim - 1.0) * f(r); };
  for (std::size_t i = 0; i + 1 < points.size(); ++i)
    if (points[i + 1] > points[i]) sum += quad::tanh_sinh(integrand, points[i], points[i + 1], rel_tol).value;
  return sphere_surface(dim) * sum;
}

enum class ProfileSpace { position, momentum };

namespace detail {

template <class F>
Profile sample(F&& f, double grid_max, int points) {
  if (points < 2) throw DomainError("profile: need at least 2 points");
  if (!(grid_max > 0.0)) throw DomainError("profile: grid extent must be > 0");
  Profile out;
  out.grid.reserve(points);
  out.density.reserve(points);
  for (int i = 0; i < points; ++i) {
    const double x = grid_max * i / (points - 1);
    out.grid.push_back(x);
    out.density.push_back(f(x));
  }
  return out;
}

// Energy above which occupations are below e^{-50} of their peak.
inline double energy_cutoff(const ThermoState& state) { return std::max(state.mu, 0.0) + 50.0 * state.temperature; }

}  // namespace detail

/// Support edge of a distribution: the turning radius (position) or the
/// momentum sqrt(2 m E) for the given energy.
inline double support_edge(const Trap& trap, ProfileSpace space, double energy) {
  if (space == ProfileSpace::position) return trap.turning_radius(energy);
  return std::sqrt(2.0 * trap.mass() * energy);
}

inline Profile finite_temperature_profile(const GasSpec& gas, const ThermoState& state, ProfileSpace space,
                                          double grid_max, int points) {
  detail::check_state(gas.statistics, state);
  auto f = [&](double x) {
    return space == ProfileSpace::position ? spatial_density(gas, state, x) : momentum_density(gas, state, x);
  };
  Profile out = detail::sample(f, grid_max, points);
  std::vector<double> pts{0.0};
  if (gas.statistics == Statistics::fermi && state.mu > 0.0) pts.push_back(support_edge(gas.trap, space, state.mu));
  const double edge = support_edge(gas.trap, space, detail::energy_cutoff(state));
  if (edge > pts.back()) pts.push_back(edge);
  out.normalization = radial_integral(gas.trap.dim(), f, pts);
  return out;
}

inline Profile zero_temperature_profile(const GasSpec& gas, double fermi_energy, ProfileSpace space,
                                        double grid_max, int points) {
  if (gas.statistics != Statistics::fermi) throw DomainError("zero-temperature profiles require FERMI statistics");
  auto f = [&](double x) {
    return space == ProfileSpace::position ? fermi_spatial_density_T0(gas, fermi_energy, x)
                                           : fermi_momentum_density_T0(gas, fermi_energy, x);
  };
  Profile out = detail::sample(f, grid_max, points);
  const std::array<double, 2> pts{0.0, support_edge(gas.trap, space, fermi_energy)};
  out.normalization = radial_integral(gas.trap.dim(), f, pts);
  return out;
}

}  // namespace qgas
