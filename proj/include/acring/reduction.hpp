#pragma once

// Reduction of a thin toroidal condensate to the dimensionless azimuthal model.
//
// The transverse profile is the Gaussian
//   Phi(rho, z) = exp[-(rho - rho0)^2 / (4 s_rho^2) - z^2 / (4 s_z^2)] / sqrt(2 pi s_rho s_z),
// so s_rho and s_z are the standard deviations of |Phi|^2. Energies are
// measured in units of hbar^2 / (2 M rho0^2).

#include <algorithm>
#include <cmath>
#include <numbers>

#include "acring/error.hpp"
#include "acring/units.hpp"

namespace acring {

struct TrapSetup {
  double atom_count = 1.0;         // N
  double scattering_length = 0.0;  // a_sc, m
  double atom_mass = 0.0;          // M, kg
  double torus_radius = 0.0;       // rho_0, m
  double width_rho = 0.0;          // sigma_rho, m
  double width_z = 0.0;            // sigma_z, m
  double potential_mean = 0.0;     // <V> over the transverse profile, J
};

/// The two numbers that define the azimuthal model, plus the m-independent
/// constant part of the effective chemical potential (reporting only).
struct RingParams {
  double eta = 0.0;
  double u_tilde = 0.0;
  double mu_offset = 0.0;

  /// u_tilde / 2 pi, the uniform-state interaction energy.
  double interaction_per_length() const { return u_tilde / (2.0 * std::numbers::pi); }

  static RingParams from_interaction_per_length(double eta, double u_tilde_over_2pi) {
    return {eta, u_tilde_over_2pi * 2.0 * std::numbers::pi, 0.0};
  }
};

namespace reduction {

namespace detail {

inline void validate_widths(const TrapSetup& trap) {
  acring::detail::require(std::isfinite(trap.width_rho) && trap.width_rho > 0.0, "sigma_rho must be > 0");
  acring::detail::require(std::isfinite(trap.width_z) && trap.width_z > 0.0, "sigma_z must be > 0");
  acring::detail::require(std::isfinite(trap.torus_radius) && trap.torus_radius > 0.0,
                          "torus radius must be > 0");
}

inline void validate(const TrapSetup& trap) {
  validate_widths(trap);
  acring::detail::require(std::isfinite(trap.atom_count) && trap.atom_count >= 1.0, "atom count must be >= 1");
  acring::detail::require(std::isfinite(trap.scattering_length), "scattering length must be finite");
  acring::detail::require(std::isfinite(trap.potential_mean), "<V> must be finite");
}

}  // namespace detail

/// u~0 = N u0 / (4 pi rho0^2 s_rho s_z) / (hbar^2 / 2 M rho0^2) with
/// u0 = 4 pi hbar^2 a_sc / M. Mass, hbar and rho0 cancel, leaving
/// 2 N a_sc / (s_rho s_z).
inline double effective_interaction(const TrapSetup& trap) {
  detail::validate(trap);
  return 2.0 * trap.atom_count * trap.scattering_length / (trap.width_rho * trap.width_z);
}

/// -rho0^2 <d^2/drho^2 + d^2/dz^2> over the Gaussian profile.
inline double transverse_kinetic_offset(const TrapSetup& trap) {
  detail::validate_widths(trap);
  const double r2 = trap.torus_radius * trap.torus_radius;
  return r2 * (0.25 / (trap.width_rho * trap.width_rho) + 0.25 / (trap.width_z * trap.width_z));
}

/// Contribution of the first-derivative term -rho0^2 <(1/rho) d/drho> that
/// transverse_kinetic_offset leaves out, by Simpson quadrature over rho.
/// Tends to -1/2 for s_rho << rho0; compare with transverse_kinetic_offset
/// to judge whether the thin-torus reduction is adequate.
inline double dropped_radial_term(const TrapSetup& trap) {
  detail::validate_widths(trap);
  const double r0 = trap.torus_radius;
  const double s = trap.width_rho;
  const double lo = std::max(r0 - 12.0 * s, 1e-6 * r0);
  const double hi = r0 + 12.0 * s;
  constexpr int intervals = 8000;
  const double h = (hi - lo) / intervals;
  auto integrand = [&](double rho) {
    const double d = rho - r0;
    const double density = std::exp(-d * d / (2.0 * s * s)) / (std::sqrt(2.0 * std::numbers::pi) * s);
    return -d / (2.0 * s * s) * density / rho;
  };
  double sum = integrand(lo) + integrand(hi);
  for (int i = 1; i < intervals; ++i) sum += (i % 2 ? 4.0 : 2.0) * integrand(lo + i * h);
  return -r0 * r0 * sum * h / 3.0;
}

/// Energy unit hbar^2 / (2 M rho0^2) in joules.
inline double energy_unit(const TrapSetup& trap) {
  acring::detail::require(std::isfinite(trap.atom_mass) && trap.atom_mass > 0.0, "atom mass must be > 0");
  acring::detail::require(trap.torus_radius > 0.0, "torus radius must be > 0");
  constexpr double hbar = units::PhysicalConstants::reduced_planck;
  return hbar * hbar / (2.0 * trap.atom_mass * trap.torus_radius * trap.torus_radius);
}

/// Assembles RingParams. mu_offset = eta^2/2 + <V>/unit + transverse kinetic
/// term; it does not depend on the winding and never changes which one wins.
inline RingParams build_ring_params(const TrapSetup& trap, double eta) {
  detail::validate(trap);
  acring::detail::require(std::isfinite(eta), "eta must be finite");
  RingParams params;
  params.eta = eta;
  params.u_tilde = effective_interaction(trap);
  params.mu_offset =
      0.5 * eta * eta + trap.potential_mean / energy_unit(trap) + transverse_kinetic_offset(trap);
  return params;
}

}  // namespace reduction
}  // namespace acring
