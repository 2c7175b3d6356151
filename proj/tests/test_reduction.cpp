#include <gtest/gtest.h>

#include <random>

#include "acring/reduction.hpp"
#include "oracles.hpp"

namespace {

using namespace acring;
using namespace acring::reduction;
constexpr double kHbar = units::PhysicalConstants::reduced_planck;
constexpr double kSodiumMass = 22.98976928 * units::PhysicalConstants::atomic_mass_unit;

TrapSetup make_trap(double atoms, double a_sc, double rho0, double s_rho, double s_z, double v = 0.0) {
  return {atoms, a_sc, kSodiumMass, rho0, s_rho, s_z, v};
}

TEST(EffectiveInteraction, PluggedValue) {
  EXPECT_NEAR(effective_interaction(make_trap(1e6, 3e-9, 1e-3, 10e-6, 10e-6)), 6e7, 1e-6 * 6e7);
}

TEST(EffectiveInteraction, IdealGas) {
  EXPECT_EQ(effective_interaction(make_trap(1, 0.0, 1e-3, 1e-5, 1e-5)), 0.0);
}

TEST(EffectiveInteraction, AgreesWithUnsimplifiedForm) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> atoms(1, 1e8), a(-5e-9, 5e-9), mass(1e-27, 3e-25), r0(1e-5, 1e-2),
      s(1e-7, 1e-4);
  for (int i = 0; i < 200; ++i) {
    const TrapSetup t{atoms(rng), a(rng), mass(rng), r0(rng), s(rng), s(rng), 0.0};
    const double direct = effective_interaction(t);
    const double full =
        oracle::interaction_unsimplified(t.atom_count, t.scattering_length, t.atom_mass, t.torus_radius,
                                         t.width_rho, t.width_z, kHbar);
    EXPECT_NEAR(direct, full, 1e-12 * std::abs(full));
    // Rescaling hbar or M leaves the unsimplified form unchanged.
    EXPECT_NEAR(oracle::interaction_unsimplified(t.atom_count, t.scattering_length, 7.0 * t.atom_mass,
                                                 t.torus_radius, t.width_rho, t.width_z, 3.0 * kHbar),
                full, 1e-12 * std::abs(full));
  }
}

TEST(EffectiveInteraction, RejectsBadWidths) {
  EXPECT_THROW(effective_interaction(make_trap(1e6, 3e-9, 1e-3, 0.0, 1e-5)), invalid_input);
  EXPECT_THROW(effective_interaction(make_trap(1e6, 3e-9, 1e-3, 1e-5, -1e-5)), invalid_input);
  EXPECT_THROW(effective_interaction(make_trap(0.5, 3e-9, 1e-3, 1e-5, 1e-5)), invalid_input);
}

TEST(TransverseKinetic, SymmetricWidths) {
  const double s = 7e-6, r0 = 1e-3;
  EXPECT_NEAR(transverse_kinetic_offset(make_trap(1, 0, r0, s, s)), r0 * r0 / (2 * s * s), 1e-9);
}

TEST(TransverseKinetic, AxialDecoupling) {
  const double s = 5e-6, r0 = 1e-3;
  const double limit = r0 * r0 / (4 * s * s);
  double previous = transverse_kinetic_offset(make_trap(1, 0, r0, s, s));
  for (double sz : {1e-4, 1e-3, 1e-1, 1e2}) {
    const double v = transverse_kinetic_offset(make_trap(1, 0, r0, s, sz));
    EXPECT_LT(v, previous);
    EXPECT_GT(v, limit);
    previous = v;
  }
  EXPECT_NEAR(previous, limit, 1e-10 * limit);
}

TEST(TransverseKinetic, MatchesQuadratureOracle) {
  const double cases[][3] = {{1e-3, 10e-6, 10e-6}, {1e-3, 5e-6, 20e-6}, {2e-3, 30e-6, 8e-6}};
  for (const auto& c : cases) {
    const double expected = oracle::transverse_kinetic_quadrature(c[0], c[1], c[2]);
    EXPECT_NEAR(transverse_kinetic_offset(make_trap(1, 0, c[0], c[1], c[2])), expected, 1e-6 * expected);
  }
}

TEST(DroppedRadialTerm, ThinTorusLimit) {
  // -rho0^2 <(1/rho) d/drho> -> -1/2 when s_rho << rho0; tiny next to the kept term.
  const auto t = make_trap(1, 0, 1e-3, 1e-6, 1e-6);
  EXPECT_NEAR(dropped_radial_term(t), -0.5, 1e-4);
  EXPECT_LT(std::abs(dropped_radial_term(t)) / transverse_kinetic_offset(t), 1e-5);
  // Grows in relative importance as the tube fattens.
  const auto fat = make_trap(1, 0, 1e-3, 1e-4, 1e-4);
  EXPECT_GT(std::abs(dropped_radial_term(fat)) / transverse_kinetic_offset(fat),
            std::abs(dropped_radial_term(t)) / transverse_kinetic_offset(t));
}

TEST(BuildRingParams, IdealGasOffsetIsTransverseKinetic) {
  const double s = 10e-6, r0 = 1e-3;
  const auto p = build_ring_params(make_trap(1, 0, r0, s, s), 0.0);
  EXPECT_EQ(p.u_tilde, 0.0);
  EXPECT_EQ(p.eta, 0.0);
  EXPECT_NEAR(p.mu_offset, r0 * r0 / (2 * s * s), 1e-9);
}

TEST(BuildRingParams, EtaAddsHalfEtaSquared) {
  const auto trap = make_trap(1, 0, 1e-3, 10e-6, 10e-6);
  const double base = build_ring_params(trap, 0.0).mu_offset;
  EXPECT_DOUBLE_EQ(build_ring_params(trap, 1.0).mu_offset - base, 0.5);
}

TEST(BuildRingParams, PotentialShiftsOffsetInEnergyUnits) {
  auto trap = make_trap(1e6, 2.75e-9, 1e-3, 10e-6, 10e-6);
  const double base = build_ring_params(trap, 0.4).mu_offset;
  const double unit = kHbar * kHbar / (2 * kSodiumMass * 1e-6);
  trap.potential_mean = 3.0 * unit;
  EXPECT_NEAR(build_ring_params(trap, 0.4).mu_offset - base, 3.0, 1e-9 * base);
  EXPECT_DOUBLE_EQ(energy_unit(trap), unit);
}

TEST(BuildRingParams, SodiumLikeExample) {
  const auto p = build_ring_params(make_trap(1e6, 2.75e-9, 1e-3, 10e-6, 10e-6), 0.0);
  EXPECT_NEAR(p.u_tilde, 5.5e7, 1e-6 * 5.5e7);
  EXPECT_NEAR(p.interaction_per_length(), 5.5e7 / (2 * std::numbers::pi), 1e-3);
}

}  // namespace
