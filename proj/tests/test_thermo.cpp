#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "qgas/thermo.hpp"
#include "support.hpp"

using namespace qgas;
using qgas_test::rel_diff;

namespace {

GasSpec harmonic3(Statistics s, double n) { return {s, n, Trap::power_law(3, 2, 0.5)}; }

// Radial integral by Gauss-Kronrod with a breakpoint at the support edge.
template <class F>
double gk_radial(double dim, F f, double edge) {
  auto g = [&](double x) { return std::pow(x, dim - 1.0) * f(x); };
  return sphere_surface(dim) * quad::gauss_kronrod(g, 0.0, edge, 0.0, 1e-12).value;
}

}  // namespace

TEST(ThermalWavelength, Values) {
  EXPECT_NEAR(thermal_wavelength(2 * std::numbers::pi), 1.0, 1e-15);
  EXPECT_NEAR(thermal_wavelength(std::numbers::pi / 2), 2.0, 1e-15);
  EXPECT_NEAR(thermal_wavelength(4.0) / thermal_wavelength(1.0), 0.5, 1e-15);
  EXPECT_THROW(thermal_wavelength(0.0), DomainError);
}

TEST(Feasibility, TruthTable) {
  EXPECT_FALSE(bec_feasible(2, std::nullopt));
  EXPECT_TRUE(bec_feasible(2, 2.0));
  EXPECT_FALSE(bec_feasible(1, 2.0));
  EXPECT_TRUE(bec_feasible(1, 1.5));
  EXPECT_TRUE(bec_feasible(3, std::nullopt));
  EXPECT_FALSE(bec_feasible(1, std::nullopt));
  EXPECT_THROW(bec_feasible(0, 2.0), DomainError);
}

TEST(FermiEnergy, HarmonicCollapse) {
  EXPECT_NEAR(fermi_energy(harmonic3(Statistics::fermi, 1000)), 18.1712059283213966, 1e-12);
  EXPECT_NEAR(fermi_energy(harmonic3(Statistics::fermi, 1)), 1.81712059283213966, 1e-13);
  // 1D oscillator: E_F = N hbar w.
  EXPECT_NEAR(fermi_energy({Statistics::fermi, 37, Trap::power_law(1, 2, 0.5)}), 37.0, 1e-12);
  EXPECT_THROW(fermi_energy(harmonic3(Statistics::bose, 10)), DomainError);
}

TEST(FermiEnergy, Scaling) {
  qgas_test::Sampler gen(21);
  for (int i = 0; i < 100; ++i) {
    const Trap t = Trap::power_law(gen.uniform(0.5, 4), gen.uniform(0.5, 6), gen.log_uniform(0.1, 10));
    const double n = gen.log_uniform(1, 1e6), c = gen.uniform(0.5, 3);
    const double e1 = fermi_energy({Statistics::fermi, n, t});
    EXPECT_LT(rel_diff(fermi_energy({Statistics::fermi, std::pow(c, t.gamma()) * n, t}), c * e1), 1e-12);
    EXPECT_LT(rel_diff(fermi_energy({Statistics::fermi, 2 * n, t}), std::pow(2.0, 1 / t.gamma()) * e1), 1e-12);
  }
}

TEST(FermiEnergy, FillsDensityOfStates) {
  // Counting function at E_F equals N.
  for (double d : {1.0, 2.5, 3.0})
    for (double n : {1.0, 3.0}) {
      const GasSpec gas{Statistics::fermi, 500, Trap::power_law(d, n, 0.7)};
      EXPECT_LT(rel_diff(density_of_states(gas.trap).counting(fermi_energy(gas)), 500.0), 1e-12);
    }
}

TEST(BoxFermiEnergy, Values) {
  EXPECT_NEAR(box_fermi_energy(3, 1.0), 7.5963331205759952, 1e-13);
  EXPECT_NEAR(box_fermi_energy(3, 1.0), 0.5 * std::pow(6 * std::numbers::pi * std::numbers::pi, 2.0 / 3), 1e-13);
  EXPECT_NEAR(box_fermi_energy(3, std::pow(2.0, 1.5)), 2 * box_fermi_energy(3, 1.0), 1e-12);
  EXPECT_THROW(box_fermi_energy(3, 0.0), DomainError);
}

TEST(BoxFermiEnergy, DegenerateGasReproducesDensity) {
  // Box number at mu = E_F, T -> 0 divided by the box volume.
  const double ef = box_fermi_energy(3, 1.0);
  const double n = total_number(Statistics::fermi, Trap::box(3), {ef * 1e-4, ef}) / ball_volume(3);
  EXPECT_NEAR(n, 1.0, 1e-6);
}

TEST(BoxBecTemperature, Values) {
  EXPECT_NEAR(*box_bec_temperature(3, 1.0), 3.31250200939562077, 1e-13);
  EXPECT_NEAR(*box_bec_temperature(4, 1.0), 4.89897948556635620, 1e-13);
  EXPECT_FALSE(box_bec_temperature(2, 1.0).has_value());
  EXPECT_FALSE(box_bec_temperature(1.5, 1.0).has_value());
}

TEST(BecTemperature, HarmonicCollapse) {
  EXPECT_NEAR(*bec_temperature(harmonic3(Statistics::bose, 1000)), 9.40498970257040549, 1e-12);
  EXPECT_FALSE(bec_temperature({Statistics::bose, 10, Trap::box(2)}).has_value());
  EXPECT_FALSE(bec_temperature({Statistics::bose, 10, Trap::power_law(1, 2, 1)}).has_value());
  const auto tb = bec_temperature({Statistics::bose, 10, Trap::power_law(1, 1.5, 3.0)});
  ASSERT_TRUE(tb.has_value());
  EXPECT_TRUE(std::isfinite(*tb));
}

TEST(BecTemperature, ThermalNumberAtTransitionIsN) {
  for (double d : {1.0, 2.0, 3.0})
    for (double n : {1.0, 1.5, 2.0, 4.0}) {
      const GasSpec gas{Statistics::bose, 1e4, Trap::power_law(d, n, 1.3)};
      const auto tb = bec_temperature(gas);
      if (!bec_feasible(gas.trap)) {
        EXPECT_FALSE(tb);
        continue;
      }
      EXPECT_LT(rel_diff(total_number(gas, {*tb, 0.0}), 1e4), 1e-12) << d << " " << n;
    }
}

TEST(CondensedFraction, Values) {
  const GasSpec gas = harmonic3(Statistics::bose, 1000);
  const double tb = *bec_temperature(gas);
  EXPECT_NEAR(condensed_fraction(gas, tb / 2).fraction(), 0.875, 1e-12);
  EXPECT_EQ(condensed_fraction(gas, tb).condensed, 0.0);
  EXPECT_EQ(condensed_fraction(gas, 0.0).fraction(), 1.0);
  EXPECT_EQ(condensed_fraction(gas, 2 * tb).condensed, 0.0);
  EXPECT_THROW(condensed_fraction({Statistics::bose, 10, Trap::box(2)}, 1.0), FeasibilityError);
  EXPECT_THROW(condensed_fraction_ratio(1.0, 0.5), FeasibilityError);
}

TEST(CondensedFraction, ExponentProperty) {
  qgas_test::Sampler gen(31);
  for (int i = 0; i < 100; ++i) {
    const Trap t = Trap::power_law(gen.uniform(1.0, 4.0), gen.uniform(0.5, 3.0), 1.0);
    if (!bec_feasible(t)) continue;
    const GasSpec gas{Statistics::bose, 1000, t};
    const double tb = *bec_temperature(gas);
    const double t1 = gen.uniform(0.05, 0.45) * tb, t2 = gen.uniform(0.5, 0.95) * tb;
    const double slope =
        std::log(condensed_fraction(gas, t2).thermal / condensed_fraction(gas, t1).thermal) / std::log(t2 / t1);
    EXPECT_NEAR(slope, t.gamma(), 1e-10);
  }
}

TEST(TotalNumber, BoltzmannLimit) {
  const Trap t = Trap::power_law(2.5, 3, 0.8);
  const ThermoState s{2.0, -2.0 * 30};
  const double classical = number_prefactor(t) * std::pow(2.0, t.gamma()) * std::exp(-30.0);
  EXPECT_LT(rel_diff(total_number(Statistics::fermi, t, s), classical), 1e-12);
  EXPECT_LT(rel_diff(total_number(Statistics::bose, t, s), classical), 1e-12);
}

TEST(TotalNumber, BoseRejectsPositiveMu) {
  try {
    total_number(Statistics::bose, Trap::power_law(3, 2, 1), {1.0, 0.1});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("BOSE requires mu <= 0"), std::string::npos);
  }
  EXPECT_THROW(total_number(Statistics::fermi, Trap::power_law(3, 2, 1), {0.0, 0.1}), DomainError);
}

TEST(Property, NumberIncreasesWithMu) {
  qgas_test::Sampler gen(41);
  for (int i = 0; i < 200; ++i) {
    const Trap t = Trap::power_law(gen.uniform(0.5, 3.5), gen.uniform(0.5, 6), gen.log_uniform(0.1, 10));
    const double temp = gen.log_uniform(0.1, 10);
    const double mu = gen.uniform(-5, 5) * temp, dmu = gen.uniform(0.01, 1) * temp;
    EXPECT_LT(total_number(Statistics::fermi, t, {temp, mu}), total_number(Statistics::fermi, t, {temp, mu + dmu}));
    const double bmu = -gen.log_uniform(1e-3, 5) * temp;
    EXPECT_LT(total_number(Statistics::bose, t, {temp, bmu - dmu}), total_number(Statistics::bose, t, {temp, bmu}));
  }
}

TEST(Property, BoseDensityDominatesFermi) {
  qgas_test::Sampler gen(43);
  for (int i = 0; i < 200; ++i) {
    const Trap t = Trap::power_law(gen.uniform(0.5, 3.5), gen.uniform(0.5, 6), gen.log_uniform(0.1, 10));
    const ThermoState s{gen.log_uniform(0.1, 10), -gen.log_uniform(1e-3, 10)};
    const GasSpec f{Statistics::fermi, 1, t}, b{Statistics::bose, 1, t};
    const double r = gen.uniform(0, 3), p = gen.uniform(0, 3);
    EXPECT_GE(spatial_density(b, s, r), spatial_density(f, s, r));
    EXPECT_GE(momentum_density(b, s, p), momentum_density(f, s, p));
  }
}

TEST(SpatialDensity, Examples) {
  const GasSpec gas = {Statistics::fermi, 1, Trap::power_law(3, 2, 1)};
  const ThermoState s{1.0, 0.0};
  EXPECT_LT(rel_diff(spatial_density(gas, s, 0.0) / spatial_density(gas, s, 1.0), 2.33422307501755703), 1e-12);
  const GasSpec box{Statistics::fermi, 1, Trap::box(3)};
  EXPECT_LT(rel_diff(spatial_density(box, {2.0, 0.7}, 0.3), std::pow(thermal_wavelength(2.0), -3) *
                                                                  specfun::fermi_fn(1.5, std::exp(0.35))),
            1e-14);
  EXPECT_EQ(spatial_density(box, {2.0, 0.7}, 1.5), 0.0);
  EXPECT_LT(spatial_density({Statistics::bose, 1, Trap::power_law(3, 2, 1)}, s, 1e3), 1e-300);
}

TEST(FermiSpatialT0, Examples) {
  const GasSpec gas = {Statistics::fermi, 1, Trap::power_law(3, 2, 1)};
  EXPECT_NEAR(fermi_spatial_density_T0(gas, 1.0, 0.0), 0.0477632640208963552, 1e-16);
  EXPECT_NEAR(fermi_spatial_density_T0(gas, 1.0, 0.0),
              std::pow(2 * std::numbers::pi, -1.5) * 4.0 / (3.0 * std::sqrt(std::numbers::pi)), 1e-16);
  EXPECT_EQ(fermi_spatial_density_T0(gas, 1.0, 1.0), 0.0);
  EXPECT_NEAR(fermi_spatial_density_T0(gas, 4.0, 0.0), 8 * fermi_spatial_density_T0(gas, 1.0, 0.0), 1e-15);
}

TEST(MomentumDensity, Examples) {
  const GasSpec f{Statistics::fermi, 1, Trap::power_law(3, 2, 1)}, b{Statistics::bose, 1, Trap::power_law(3, 2, 1)};
  const ThermoState s{1.0, -20.0};
  EXPECT_LT(rel_diff(momentum_density(f, s, 0.5), momentum_density(b, s, 0.5)), 1e-7);
  EXPECT_LT(momentum_density(f, {1.0, 0.0}, 60.0), 1e-300);
  const GasSpec t0{Statistics::fermi, 1, Trap::power_law(3, 2, 2.0)};
  EXPECT_EQ(fermi_momentum_density_T0(t0, 1.0, std::sqrt(2.0)), 0.0);
  const double expect = std::pow(2 * std::sqrt(std::numbers::pi), -3) * std::pow(2.0, -1.5) * std::pow(1.5, 1.5) /
                        std::tgamma(2.5);
  EXPECT_LT(rel_diff(fermi_momentum_density_T0(t0, 1.5, 0.0), expect), 1e-14);
}

TEST(MomentumDensity, ZeroTemperatureLimit) {
  // Finite-T momentum density tends to the T = 0 form as T -> 0 at mu = E_F.
  const GasSpec gas{Statistics::fermi, 100, Trap::power_law(2, 3, 0.9)};
  const double ef = fermi_energy(gas);
  for (double p : {0.0, 0.3, 0.8})
    EXPECT_LT(rel_diff(momentum_density(gas, {ef * 1e-6, ef}, p), fermi_momentum_density_T0(gas, ef, p)), 1e-6);
}

TEST(Profiles, ZeroTemperatureNormalization) {
  for (double d : {1.0, 2.0, 3.0})
    for (double n : {1.0, 2.0, 4.0}) {
      const GasSpec gas{Statistics::fermi, 1000, Trap::power_law(d, n, 0.5)};
      const double ef = fermi_energy(gas);
      const double r_edge = gas.trap.turning_radius(ef), p_edge = std::sqrt(2 * ef);
      const double nr = gk_radial(d, [&](double r) { return fermi_spatial_density_T0(gas, ef, r); }, r_edge);
      const double np = gk_radial(d, [&](double p) { return fermi_momentum_density_T0(gas, ef, p); }, p_edge);
      EXPECT_LT(rel_diff(nr, 1000), 1e-9) << d << " " << n;
      EXPECT_LT(rel_diff(np, 1000), 1e-9) << d << " " << n;
      EXPECT_LT(rel_diff(zero_temperature_profile(gas, ef, ProfileSpace::position, r_edge, 5).normalization, 1000), 1e-9);
      EXPECT_LT(rel_diff(zero_temperature_profile(gas, ef, ProfileSpace::momentum, p_edge, 5).normalization, 1000), 1e-9);
    }
}

TEST(Profiles, FiniteTemperatureNormalization) {
  for (Statistics st : {Statistics::fermi, Statistics::bose}) {
    const GasSpec gas{st, 1000, Trap::power_law(3, 2, 0.5)};
    const double t = 1.2 * characteristic_temperature(gas);
    const auto sol = solve_mu(gas, t);
    for (ProfileSpace sp : {ProfileSpace::position, ProfileSpace::momentum}) {
      const Profile p = finite_temperature_profile(gas, sol.state, sp, 10.0, 11);
      EXPECT_LT(rel_diff(p.normalization, 1000), 1e-9);
      EXPECT_EQ(p.grid.size(), 11u);
      EXPECT_DOUBLE_EQ(p.grid.back(), 10.0);
    }
  }
}

TEST(Profiles, Errors) {
  const GasSpec b{Statistics::bose, 10, Trap::power_law(3, 2, 0.5)};
  EXPECT_THROW(zero_temperature_profile(b, 1.0, ProfileSpace::position, 1.0, 10), DomainError);
  const GasSpec f{Statistics::fermi, 10, Trap::power_law(3, 2, 0.5)};
  EXPECT_THROW(zero_temperature_profile(f, 1.0, ProfileSpace::position, 1.0, 1), DomainError);
  EXPECT_THROW(zero_temperature_profile(f, 1.0, ProfileSpace::position, 0.0, 10), DomainError);
}

TEST(SolveMu, ConsistencyAcrossRegimes) {
  const std::vector<Trap> traps = {Trap::power_law(3, 2, 0.5), Trap::power_law(1, 2, 1.0), Trap::power_law(2, 1, 0.3),
                                   Trap::power_law(1, 4, 2.0), Trap::box(3), Trap::box(2), Trap::box(1)};
  for (const Trap& t : traps)
    for (Statistics st : {Statistics::fermi, Statistics::bose})
      for (double ratio : {0.1, 1.0, 10.0}) {
        const GasSpec gas{st, 1000, t};
        const double temp = ratio * characteristic_temperature(gas);
        const auto sol = solve_mu(gas, temp);
        double n = total_number(gas, sol.state);
        if (sol.split) n += sol.split->condensed;
        EXPECT_LT(rel_diff(n, 1000), 1e-9) << to_string(st) << " gamma=" << t.gamma() << " ratio=" << ratio;
        if (st == Statistics::bose) {
          EXPECT_LE(sol.state.mu, 0.0);
        }
      }
}

TEST(SolveMu, CondensateBelowTransition) {
  const GasSpec gas = harmonic3(Statistics::bose, 1000);
  const double tb = *bec_temperature(gas);
  const auto sol = solve_mu(gas, tb / 2);
  EXPECT_EQ(sol.state.mu, 0.0);
  ASSERT_TRUE(sol.split);
  EXPECT_NEAR(sol.split->fraction(), 0.875, 1e-12);
  EXPECT_LT(rel_diff(sol.split->total(), 1000), 1e-12);
  const auto above = solve_mu(gas, 1.5 * tb);
  EXPECT_LT(above.state.mu, 0.0);
  EXPECT_EQ(above.split->condensed, 0.0);
}

TEST(SolveMu, FermiLowTemperature) {
  const GasSpec gas = harmonic3(Statistics::fermi, 1000);
  const double ef = fermi_energy(gas);
  EXPECT_LT(rel_diff(solve_mu(gas, ef / 1000).state.mu, ef), 5e-3);
  EXPECT_LT(rel_diff(solve_mu(gas, ef / 1000).state.mu, ef), 1e-5);
}

TEST(SolveMu, ClassicalLimit) {
  for (Statistics st : {Statistics::fermi, Statistics::bose}) {
    const GasSpec gas{st, 10, Trap::power_law(3, 2, 0.5)};
    const double temp = 1e3;
    const double classical = temp * std::log(10.0 / (number_prefactor(gas.trap) * std::pow(temp, 3.0)));
    EXPECT_LT(rel_diff(solve_mu(gas, temp).state.mu, classical), 1e-4);
  }
}

TEST(SolveMu, MonotoneInN) {
  qgas_test::Sampler gen(51);
  for (int i = 0; i < 50; ++i) {
    const Trap t = Trap::power_law(gen.uniform(0.7, 3), gen.uniform(0.7, 4), gen.uniform(0.2, 2));
    const double n = gen.log_uniform(1, 1e5), temp = gen.log_uniform(0.1, 10);
    EXPECT_LT(solve_mu({Statistics::fermi, n, t}, temp).state.mu, solve_mu({Statistics::fermi, 1.1 * n, t}, temp).state.mu);
  }
}

TEST(SolveMu, Errors) {
  EXPECT_THROW(solve_mu(harmonic3(Statistics::fermi, 10), 0.0), DomainError);
  EXPECT_THROW(solve_mu(harmonic3(Statistics::fermi, -1), 1.0), DomainError);
}

TEST(HarmonicTrap, GeometricMean) {
  const std::array<double, 3> ones{1, 1, 1}, spread{1, 2, 4};
  const std::array<double, 2> threes{3, 3};
  EXPECT_DOUBLE_EQ(harmonic_trap(3, std::span<const double>(ones), 2.0).strength(), 1.0);
  EXPECT_NEAR(harmonic_trap(3, std::span<const double>(spread)).strength(), 2.0, 1e-14);
  EXPECT_NEAR(harmonic_trap(2, std::span<const double>(threes)).strength(), 4.5, 1e-14);
  const std::array<double, 2> bad{1, 0};
  EXPECT_THROW(harmonic_trap(2, std::span<const double>(bad)), DomainError);
}

TEST(BoxLimit, MonotoneConvergence) {
  const double n = 1000;
  const double box = *box_bec_temperature(3, n / ball_volume(3));
  double prev_gap = INFINITY;
  for (double expo : {10.0, 1e2, 1e3, 1e4}) {
    const double gap = std::abs(*bec_temperature({Statistics::bose, n, Trap::power_law(3, expo, 1.0)}) - box);
    EXPECT_LT(gap, prev_gap);
    prev_gap = gap;
  }
  EXPECT_LT(prev_gap / box, 0.01);
  EXPECT_LT(rel_diff(*bec_temperature({Statistics::bose, n, Trap::box(3)}), box), 1e-15);
}
