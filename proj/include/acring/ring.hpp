#pragma once

// Closed-form theory of the azimuthal model
//   [-(d/dphi - i eta)^2 + u~0 |psi|^2] psi = mu psi,   psi(phi + 2 pi) = psi(phi):
// plane-wave chemical potentials, the ground-state winding and the two-mode
// (m, m+1) variational path with its barrier.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "acring/error.hpp"
#include "acring/reduction.hpp"

namespace acring::ring {

struct PlaneWaveState {
  int winding = 0;
};

/// psi = [sqrt(1-x) e^{i m phi} + sqrt(x) e^{i theta} e^{i (m+1) phi}] / sqrt(2 pi)
struct MixedState {
  int winding = 0;
  double mixing = 0.0;  // x in [0, 1]
  double phase = 0.0;   // theta in [0, 2 pi)
};

struct GroundWindingResult {
  int winding = 0;
  bool degenerate = false;  // eta sits on a half-integer; winding is the lower one
  double mu_eff = 0.0;
};

struct Barrier {
  double x_peak = 0.0;
  double mu_peak = 0.0;
  double height_from_m = 0.0;
  double height_from_m_plus_1 = 0.0;
};

/// Half-integer detection slack, in ulps of max(1, |eta|). Sweep grids built
/// as start + i * step land a few ulps off exact half-integers.
inline constexpr double kHalfIntegerUlps = 8.0;

inline bool is_half_integer(double eta) {
  const double frac = eta - std::floor(eta);
  const double slack = kHalfIntegerUlps * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(eta));
  return std::abs(frac - 0.5) <= slack;
}

/// (m - eta)^2 + u~0 / 2 pi. Excludes RingParams::mu_offset.
inline double mu_uniform(int m, const RingParams& params) {
  const double d = m - params.eta;
  return d * d + params.interaction_per_length();
}

inline double mu_uniform(PlaneWaveState state, const RingParams& params) {
  return mu_uniform(state.winding, params);
}

/// mu_uniform plus the winding-independent offset, for absolute reporting.
inline double mu_uniform_absolute(int m, const RingParams& params) {
  return mu_uniform(m, params) + params.mu_offset;
}

/// Nearest integer to eta; on a half-integer the lower neighbor, flagged.
inline GroundWindingResult ground_winding(const RingParams& params) {
  acring::detail::require(std::isfinite(params.eta), "eta must be finite");
  GroundWindingResult result;
  if (is_half_integer(params.eta)) {
    result.winding = static_cast<int>(std::floor(params.eta));
    result.degenerate = true;
  } else {
    result.winding = static_cast<int>(std::floor(params.eta + 0.5));
  }
  result.mu_eff = mu_uniform(result.winding, params);
  return result;
}

/// Two-mode chemical potential; theta drops out.
inline double mu_mixed(const MixedState& state, const RingParams& params) {
  acring::detail::require(state.mixing >= 0.0 && state.mixing <= 1.0, "mixing x must lie in [0, 1]");
  const double x = state.mixing;
  const double a = state.winding - params.eta;
  const double b = state.winding + 1 - params.eta;
  return (1.0 - x) * a * a + x * b * b + params.interaction_per_length() * (1.0 + 2.0 * x * (1.0 - x));
}

/// Stationary point of mu_mixed in x: 1/2 + (m + 1/2 - eta) pi / u~0.
inline double barrier_location(int m, const RingParams& params) {
  acring::detail::require(params.u_tilde > 0.0, "barrier analysis requires u_tilde > 0");
  return 0.5 + (m + 0.5 - params.eta) * std::numbers::pi / params.u_tilde;
}

/// Peak value written as (1 + pi/u)(m - eta)(m + 1 - eta) + (1 + pi/2u + 3u/2pi)/2.
/// Equals mu_mixed at barrier_location.
inline double barrier_peak_closed_form(int m, const RingParams& params) {
  acring::detail::require(params.u_tilde > 0.0, "barrier analysis requires u_tilde > 0");
  const double u = params.u_tilde;
  constexpr double pi = std::numbers::pi;
  return (1.0 + pi / u) * (m - params.eta) * (m + 1 - params.eta) +
         0.5 * (1.0 + pi / (2.0 * u) + 3.0 * u / (2.0 * pi));
}

/// Interior maximum of the m -> m+1 path, or nullopt when the peak lies
/// outside (0, 1) and the path is monotone.
inline std::optional<Barrier> barrier(int m, const RingParams& params) {
  const double x = barrier_location(m, params);
  if (!(x > 0.0 && x < 1.0)) return std::nullopt;
  Barrier b;
  b.x_peak = x;
  b.mu_peak = mu_mixed({m, x, 0.0}, params);
  b.height_from_m = b.mu_peak - mu_uniform(m, params);
  b.height_from_m_plus_1 = b.mu_peak - mu_uniform(m + 1, params);
  return b;
}

/// Half-width of the eta window around m + 1/2 inside which both m and m+1
/// are locally stable: |m + 1/2 - eta| < u~0 / 2 pi.
inline double metastability_half_width(const RingParams& params) {
  return params.interaction_per_length();
}

}  // namespace acring::ring
