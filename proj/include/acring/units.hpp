#pragma once

// Feasibility estimates for the Aharonov-Casher phase of a spin-polarized
// atom circulating around a charge distribution.
//
// All electrostatics is in Gaussian units: the field of a line charge is
// 2 n_e / rho and the field of a point charge is N_e / rho^2. Field strengths
// are returned in atomic units (e / a0^2); multiply by
// PhysicalConstants::au_field_strength for V/cm.

#include <cmath>

#include "acring/error.hpp"

namespace acring::units {

/// Fixed CODATA 2018 values. Only order-of-magnitude feasibility numbers are
/// derived from these, so they are not configurable.
struct PhysicalConstants {
  static constexpr double fine_structure_alpha = 7.2973525693e-3;  // e^2 / hbar c
  static constexpr double compton_length = 3.8615926796e-13;       // hbar / m_e c, m
  static constexpr double bohr_radius = 5.29177210903e-11;         // m
  static constexpr double reduced_planck = 1.054571817e-34;        // J s
  static constexpr double au_field_strength = 5.14220674763e9;     // V/cm per a.u.
  static constexpr double bohr_magneton = 9.2740100783e-24;        // J/T
  static constexpr double hartree_energy = 4.3597447222071e-18;    // e^2 / a0, J
  static constexpr double atomic_mass_unit = 1.66053906660e-27;   // kg
  /// mu_B * (1 gauss) / (e^2 / a0), dimensionless.
  static constexpr double zeeman_ratio_per_gauss = bohr_magneton * 1e-4 / hartree_energy;
  /// (a0 / compton_length)^2. Identical to 1/alpha^2 since a0 = compton_length / alpha.
  static constexpr double bohr_over_compton_squared =
      1.0 / (fine_structure_alpha * fine_structure_alpha);
};

/// Infinitely long charged wire along the trap axis.
struct LineChargeSetup {
  double linear_charge_density = 0.0;  // elementary charges per meter
  double lande_g = 1.0;                // g_F
  double probe_distance = 1e-3;        // rho, m
};

/// Charged sphere at the center of a thin torus.
struct TorusChargeSetup {
  double sphere_charge_count = 0.0;  // N_e, elementary charges on the sphere
  double torus_radius = 1e-3;        // rho_0, m
  double lande_g = 1.0;
};

/// Polarizable atom in crossed radial E and axial B fields.
struct CrossedFieldSetup {
  double static_polarizability = 0.0;  // alpha(0) in units of a0^3
  double charges_per_bohr = 0.0;       // N_e per Bohr radius (not per Compton length)
  double magnetic_field = 0.0;         // gauss
};

namespace detail {

inline void validate(const LineChargeSetup& s) {
  acring::detail::require(std::isfinite(s.linear_charge_density) && s.linear_charge_density >= 0.0,
                          "linear charge density must be finite and >= 0");
  acring::detail::require(std::isfinite(s.lande_g) && s.lande_g != 0.0, "g_F must be finite and nonzero");
  acring::detail::require(std::isfinite(s.probe_distance) && s.probe_distance > 0.0,
                          "probe distance must be > 0");
}

inline void validate(const TorusChargeSetup& s) {
  acring::detail::require(std::isfinite(s.sphere_charge_count) && s.sphere_charge_count >= 0.0,
                          "sphere charge count must be finite and >= 0");
  acring::detail::require(std::isfinite(s.torus_radius) && s.torus_radius > 0.0,
                          "torus radius must be > 0");
  acring::detail::require(std::isfinite(s.lande_g) && s.lande_g != 0.0, "g_F must be finite and nonzero");
}

inline void validate(const CrossedFieldSetup& s) {
  acring::detail::require(std::isfinite(s.static_polarizability) && s.static_polarizability >= 0.0,
                          "static polarizability must be finite and >= 0");
  acring::detail::require(std::isfinite(s.charges_per_bohr) && s.charges_per_bohr >= 0.0,
                          "charges per Bohr radius must be finite and >= 0");
  acring::detail::require(std::isfinite(s.magnetic_field) && s.magnetic_field >= 0.0,
                          "magnetic field must be finite and >= 0");
}

}  // namespace detail

/// Charges per Compton length for a density given in charges per meter.
inline double charges_per_compton_length(double charges_per_meter) {
  return charges_per_meter * PhysicalConstants::compton_length;
}

/// eta = N_e g_F alpha, with N_e counted per Compton length.
inline double eta_line_charge(const LineChargeSetup& setup) {
  detail::validate(setup);
  return charges_per_compton_length(setup.linear_charge_density) * setup.lande_g *
         PhysicalConstants::fine_structure_alpha;
}

/// Linear density (charges per meter) that produces `eta_target`.
inline double required_line_density(double eta_target, double lande_g) {
  acring::detail::require(std::isfinite(lande_g) && lande_g != 0.0, "g_F must be finite and nonzero");
  acring::detail::require(std::isfinite(eta_target), "eta must be finite");
  return eta_target /
         (lande_g * PhysicalConstants::fine_structure_alpha * PhysicalConstants::compton_length);
}

/// Radial field of the wire at `probe_distance`, in atomic units.
inline double field_line_charge(const LineChargeSetup& setup) {
  detail::validate(setup);
  const double n_compton = charges_per_compton_length(setup.linear_charge_density);
  const double rho_bar = setup.probe_distance / PhysicalConstants::compton_length;
  return 2.0 * n_compton * PhysicalConstants::bohr_over_compton_squared / rho_bar;
}

/// Field at `probe_distance` for the density that gives |eta| = 1 with this g_F.
inline double field_line_charge_unit_eta(double lande_g, double probe_distance) {
  const double density = required_line_density(1.0, std::abs(lande_g));
  return field_line_charge({density, lande_g, probe_distance});
}

/// eta = N_e g_F alpha / (2 rho_0 / compton_length), valid for a tube much
/// thinner than the torus radius.
inline double eta_torus(const TorusChargeSetup& setup) {
  detail::validate(setup);
  const double rho_bar = setup.torus_radius / PhysicalConstants::compton_length;
  return setup.sphere_charge_count * setup.lande_g * PhysicalConstants::fine_structure_alpha /
         (2.0 * rho_bar);
}

/// Sphere charge giving |eta| = 1 on a torus of the given radius.
inline double required_sphere_charge(double eta_target, double lande_g, double torus_radius) {
  acring::detail::require(std::isfinite(lande_g) && lande_g != 0.0, "g_F must be finite and nonzero");
  acring::detail::require(std::isfinite(torus_radius) && torus_radius > 0.0, "torus radius must be > 0");
  const double rho_bar = torus_radius / PhysicalConstants::compton_length;
  return eta_target * 2.0 * rho_bar / (lande_g * PhysicalConstants::fine_structure_alpha);
}

/// N_e e / rho_0^2 in atomic units.
///
/// At the eta = 1 threshold with rho_0 = 1 mm this evaluates to about
/// 2e-3 a.u. (2 / (alpha^3 g_F rho_bar_0)). A literature estimate of
/// (5/g_F) 1e-4 a.u. for the same configuration is about 4x smaller and does
/// not follow from this expression; this function returns the expression.
inline double field_torus(const TorusChargeSetup& setup) {
  detail::validate(setup);
  const double rho_bar = setup.torus_radius / PhysicalConstants::compton_length;
  return setup.sphere_charge_count / (rho_bar * rho_bar) *
         PhysicalConstants::bohr_over_compton_squared;
}

/// eta_{ExB} = alpha(0) N_e (mu_B B / (e^2/a0)).
inline double eta_cross_field(const CrossedFieldSetup& setup) {
  detail::validate(setup);
  return setup.static_polarizability * setup.charges_per_bohr *
         PhysicalConstants::zeeman_ratio_per_gauss * setup.magnetic_field;
}

inline double au_field_to_volts_per_cm(double field_au) {
  return field_au * PhysicalConstants::au_field_strength;
}

}  // namespace acring::units
