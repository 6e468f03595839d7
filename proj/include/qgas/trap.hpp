#pragma once

// Isotropic power-law confinement U(r) = A r^n in D dimensions and its
// semiclassical density of states.

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "qgas/errors.hpp"
#include "qgas/quadrature.hpp"
#include "qgas/specfun.hpp"

namespace qgas {

/// Surface measure of the unit sphere in D dimensions, D pi^{D/2} / Gamma(D/2 + 1).
/// Radial integrals use d^D r = sphere_surface(D) r^{D-1} dr.
inline double sphere_surface(double dim) {
  return dim * std::pow(std::numbers::pi, 0.5 * dim) / specfun::gamma_fn(0.5 * dim + 1.0);
}

/// Volume of the unit ball, pi^{D/2} / Gamma(D/2 + 1). This is the volume of
/// the rigid box used for the D/n -> 0 limit.
inline double ball_volume(double dim) {
  return std::pow(std::numbers::pi, 0.5 * dim) / specfun::gamma_fn(0.5 * dim + 1.0);
}

/// Confining potential. Either a power law A r^n or a rigid box of unit
/// radius (the D/n -> 0 limit). Immutable after construction.
class Trap {
 public:
  static Trap power_law(double dim, double exponent, double strength, double mass = 1.0,
                        double hbar = 1.0) {
    check_common(dim, mass, hbar);
    if (!(exponent > 0.0) || !std::isfinite(exponent))
      throw DomainError("trap exponent n must be finite and > 0");
    if (!(strength > 0.0) || !std::isfinite(strength))
      throw DomainError("trap strength A must be finite and > 0");
    return Trap(dim, exponent, strength, mass, hbar);
  }

  static Trap box(double dim, double mass = 1.0, double hbar = 1.0) {
    check_common(dim, mass, hbar);
    return Trap(dim, std::nullopt, 1.0, mass, hbar);
  }

  double dim() const { return dim_; }
  bool is_box() const { return !exponent_; }
  /// Throws for the box, which has no finite exponent.
  double exponent() const {
    if (!exponent_) throw DomainError("rigid box has no finite exponent");
    return *exponent_;
  }
  double strength() const { return strength_; }
  double mass() const { return mass_; }
  double hbar() const { return hbar_; }

  /// D/n, zero for the box.
  double dim_over_exponent() const { return exponent_ ? dim_ / *exponent_ : 0.0; }

  /// gamma = D/2 + D/n: the power of T in N(T) and of epsilon in the counting function.
  double gamma() const { return 0.5 * dim_ + dim_over_exponent(); }

  /// U(r). The box returns +inf on and outside the wall r = 1.
  double potential(double r) const {
    if (!(r >= 0.0)) throw DomainError("potential: radius must be >= 0");
    if (!exponent_) return r < 1.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return strength_ * std::pow(r, *exponent_);
  }

  /// Radius where U(r) = energy, i.e. the classical turning point.
  double turning_radius(double energy) const {
    if (!(energy >= 0.0)) throw DomainError("turning_radius: energy must be >= 0");
    if (!exponent_) return 1.0;
    return std::pow(energy / strength_, 1.0 / *exponent_);
  }

 private:
  Trap(double dim, std::optional<double> exponent, double strength, double mass, double hbar)
      : dim_(dim), exponent_(exponent), strength_(strength), mass_(mass), hbar_(hbar) {}

  static void check_common(double dim, double mass, double hbar) {
    if (!(dim > 0.0) || !std::isfinite(dim)) throw DomainError("dimension D must be finite and > 0");
    if (!(mass > 0.0) || !std::isfinite(mass)) throw DomainError("mass must be finite and > 0");
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw DomainError("hbar must be finite and > 0");
  }

  double dim_;
  std::optional<double> exponent_;
  double strength_;
  double mass_;
  double hbar_;
};

/// rho(eps) = prefactor * eps^{gamma - 1}.
struct DensityOfStates {
  double prefactor = 0.0;
  double gamma = 0.0;

  double operator()(double energy) const {
    if (!(energy > 0.0)) throw DomainError("density of states: energy must be > 0");
    return prefactor * std::pow(energy, gamma - 1.0);
  }
  /// Number of states below energy: prefactor * eps^gamma / gamma.
  double counting(double energy) const {
    if (!(energy >= 0.0)) throw DomainError("counting function: energy must be >= 0");
    return prefactor * std::pow(energy, gamma) / gamma;
  }
};

/// Closed form
///   rho(eps) = (m/2hbar^2)^{D/2} A^{-D/n} Gamma(D/n+1) / (Gamma(D/2+1) Gamma(D/2+D/n)) eps^{D/2+D/n-1}.
/// For the box, D/n = 0 and A^{-D/n} = 1, which reproduces
/// V_D (m / 2 pi hbar^2)^{D/2} eps^{D/2-1} / Gamma(D/2) with V_D the unit-ball volume.
inline DensityOfStates density_of_states(const Trap& trap) {
  using specfun::gamma_fn;
  const double d = trap.dim();
  const double dn = trap.dim_over_exponent();
  const double g = trap.gamma();
  const double kinetic = std::pow(trap.mass() / (2.0 * trap.hbar() * trap.hbar()), 0.5 * d);
  const double strength = trap.is_box() ? 1.0 : std::pow(trap.strength(), -dn);
  const double pref = kinetic * strength * gamma_fn(dn + 1.0) / (gamma_fn(0.5 * d + 1.0) * gamma_fn(g));
  return {pref, g};
}

inline double dos_closed_form(const Trap& trap, double energy) {
  if (!(energy > 0.0)) throw DomainError("dos_closed_form: energy must be > 0");
  return density_of_states(trap)(energy);
}

/// Semiclassical density of states of an arbitrary radial potential U with
/// U(0) = 0 and U non-decreasing:
///   rho(eps) = (m/2 pi hbar^2)^{D/2} / Gamma(D/2) * S_D int_0^{r_max} r^{D-1} (eps - U(r))^{(D-2)/2} dr,
/// with U(r_max) = eps located by bisection. Tanh-sinh handles the integrable
/// endpoint singularities at r = 0 (D < 1) and r = r_max (D < 2). With a
/// generic U the gap eps - U(r) loses relative precision next to r_max, which
/// limits D < 2 to about 1e-8 relative; the Trap overload avoids this.
inline double dos_quadrature(const std::function<double(double)>& potential, double dim, double energy,
                             double mass = 1.0, double hbar = 1.0, double rel_tol = 1e-10) {
  if (!(energy > 0.0)) throw DomainError("dos_quadrature: energy must be > 0");
  if (!(dim > 0.0)) throw DomainError("dos_quadrature: dimension must be > 0");
  if (potential(0.0) != 0.0) throw DomainError("dos_quadrature: potential must vanish at r = 0");

  // Bracket the turning point.
  double lo = 0.0, hi = 1.0;
  int doublings = 0;
  while (potential(hi) < energy) {
    lo = hi;
    hi *= 2.0;
    if (++doublings > 1000) throw ConvergenceError("dos_quadrature: potential never reaches energy");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-16 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (potential(mid) < energy ? lo : hi) = mid;
  }
  const double r_max = hi;

  const double expo = 0.5 * (dim - 2.0);
  auto integrand = [&](double r) {
    const double gap = energy - potential(r);
    if (!(gap > 0.0)) return 0.0;
    return std::pow(r, dim - 1.0) * std::pow(gap, expo);
  };
  const double radial = quad::tanh_sinh(integrand, 0.0, r_max, rel_tol).value;
  const double pref = std::pow(mass / (2.0 * std::numbers::pi * hbar * hbar), 0.5 * dim) /
                      specfun::gamma_fn(0.5 * dim);
  return pref * sphere_surface(dim) * radial;
}

/// Power-law and box traps. The turning point is known in closed form, so
/// eps - U(r) is evaluated from the distance to it without cancellation:
/// eps - A (r_max - delta)^n = -eps expm1(n log1p(-delta / r_max)).
inline double dos_quadrature(const Trap& trap, double energy, double rel_tol = 1e-12) {
  if (!(energy > 0.0)) throw DomainError("dos_quadrature: energy must be > 0");
  const double dim = trap.dim();
  const double r_max = trap.turning_radius(energy);
  const double expo = 0.5 * (dim - 2.0);
  auto integrand = [&](double r, double, double to_edge) {
    double gap = energy;
    if (!trap.is_box()) gap = -energy * std::expm1(trap.exponent() * std::log1p(-to_edge / r_max));
    if (!(gap > 0.0)) return 0.0;
    return std::pow(r, dim - 1.0) * std::pow(gap, expo);
  };
  const double radial = quad::tanh_sinh(integrand, 0.0, r_max, rel_tol).value;
  const double pref = std::pow(trap.mass() / (2.0 * std::numbers::pi * trap.hbar() * trap.hbar()), 0.5 * dim) /
                      specfun::gamma_fn(0.5 * dim);
  return pref * sphere_surface(dim) * radial;
}

}  // namespace qgas
