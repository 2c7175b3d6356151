#pragma once

// Imaginary-time ground states of the azimuthal model on a uniform periodic
// grid phi_j = 2 pi j / G.
//
// The kinetic operator -(d/dphi - i eta)^2 is diagonal in angular modes with
// eigenvalue (k - eta)^2 and is applied exactly in mode space; interaction and
// an optional azimuthal potential act pointwise. One step is the Strang split
//   half kinetic -> full potential -> half kinetic -> renormalize.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "acring/error.hpp"
#include "acring/reduction.hpp"
#include "acring/spectral.hpp"

namespace acring::solver {

inline bool is_valid_grid_size(std::size_t g) { return g >= 64 && (g & (g - 1)) == 0; }

/// Complex amplitudes on phi_j = 2 pi j / G, normalized so that
/// sum_j |psi_j|^2 (2 pi / G) = 1.
class RingWavefunction {
 public:
  explicit RingWavefunction(std::size_t grid_size) : amplitudes_(checked(grid_size)) {}

  explicit RingWavefunction(std::vector<cplx> amplitudes) : amplitudes_(std::move(amplitudes)) {
    checked(amplitudes_.size());
  }

  /// e^{i m phi} / sqrt(2 pi).
  static RingWavefunction plane_wave(std::size_t grid_size, int winding) {
    RingWavefunction psi(grid_size);
    const double amp = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    for (std::size_t j = 0; j < grid_size; ++j) psi.amplitudes_[j] = std::polar(amp, winding * psi.angle(j));
    return psi;
  }

  std::size_t grid_size() const { return amplitudes_.size(); }
  double spacing() const { return 2.0 * std::numbers::pi / static_cast<double>(amplitudes_.size()); }
  double angle(std::size_t j) const { return spacing() * static_cast<double>(j); }

  std::span<const cplx> amplitudes() const { return amplitudes_; }
  std::span<cplx> amplitudes() { return amplitudes_; }
  const cplx& operator[](std::size_t j) const { return amplitudes_[j]; }
  cplx& operator[](std::size_t j) { return amplitudes_[j]; }

  double norm_squared() const {
    double sum = 0.0;
    for (const auto& a : amplitudes_) sum += std::norm(a);
    return sum * spacing();
  }

  void normalize() {
    const double n = norm_squared();
    if (!(n > 0.0) || !std::isfinite(n)) throw invalid_input("cannot normalize a zero or non-finite wavefunction");
    const double s = 1.0 / std::sqrt(n);
    for (auto& a : amplitudes_) a *= s;
  }

  std::vector<double> density() const {
    std::vector<double> d(amplitudes_.size());
    std::transform(amplitudes_.begin(), amplitudes_.end(), d.begin(), [](cplx a) { return std::norm(a); });
    return d;
  }

 private:
  static std::size_t checked(std::size_t g) {
    if (!is_valid_grid_size(g)) throw invalid_input("grid size must be a power of two >= 64");
    return g;
  }

  std::vector<cplx> amplitudes_;
};

struct SolverSettings {
  std::size_t grid_size = 256;
  double tau_step = 1e-3;
  /// Converged when |mu_n - mu_{n-1}| <= tolerance * max(|mu_n|, 1).
  double tolerance = 1e-10;
  long max_iterations = 200000;
  int seed_winding = 0;
  /// Relative amplitude of the uniform complex noise multiplying the seed.
  double noise_amplitude = 0.0;
  std::uint64_t rng_seed = 20000101;

  /// Settings for a global search: a small seeded perturbation lets each
  /// run leave a sector it is only metastable in.
  static SolverSettings global_search() {
    SolverSettings s;
    s.noise_amplitude = 1e-3;
    return s;
  }

  void validate() const {
    acring::detail::require(is_valid_grid_size(grid_size), "grid size must be a power of two >= 64");
    acring::detail::require(std::isfinite(tau_step) && tau_step > 0.0, "tau step must be > 0");
    acring::detail::require(std::isfinite(tolerance) && tolerance > 0.0, "tolerance must be > 0");
    acring::detail::require(max_iterations >= 1, "max iterations must be >= 1");
    acring::detail::require(std::isfinite(noise_amplitude) && noise_amplitude >= 0.0, "noise amplitude must be >= 0");
  }
};

struct GroundStateReport {
  RingWavefunction wavefunction{256};
  double mu = 0.0;
  double energy_per_particle = 0.0;
  int winding = 0;
  long iterations = 0;
  bool converged = false;
};

/// Kinetic, interaction and potential pieces of one state.
struct EnergyParts {
  double kinetic = 0.0;      // int |(d/dphi - i eta) psi|^2
  double interaction = 0.0;  // u~0 int |psi|^4
  double potential = 0.0;    // int V |psi|^2

  /// Chemical potential, the Rayleigh quotient of the nonlinear operator.
  double mu() const { return kinetic + interaction + potential; }
  /// Energy per particle; the interaction is counted once per pair.
  double energy() const { return kinetic + 0.5 * interaction + potential; }
};

namespace detail {

inline void check_potential(std::span<const double> potential, std::size_t grid_size) {
  acring::detail::require(potential.empty() || potential.size() == grid_size,
                          "azimuthal potential must be empty or have one sample per grid point");
  for (double v : potential) acring::detail::require(std::isfinite(v), "azimuthal potential must be finite");
}

/// Uniform deviate in [-1, 1) from the top 53 bits, identical on every platform.
inline double symmetric_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
}

}  // namespace detail

/// e^{i m phi}(1 + a (xi + i zeta)) / sqrt(2 pi), renormalized, with xi, zeta
/// uniform on [-1, 1). The noise pattern depends only on the rng seed, so
/// seeds m and m+1 differ by exactly the factor e^{i phi}.
inline RingWavefunction seed_state(std::size_t grid_size, int winding, double noise_amplitude,
                                   std::uint64_t rng_seed) {
  auto psi = RingWavefunction::plane_wave(grid_size, winding);
  if (noise_amplitude > 0.0) {
    std::mt19937_64 rng(rng_seed);
    for (auto& a : psi.amplitudes()) {
      const double re = detail::symmetric_unit(rng);
      const double im = detail::symmetric_unit(rng);
      a *= cplx(1.0 + noise_amplitude * re, noise_amplitude * im);
    }
  }
  psi.normalize();
  return psi;
}

/// Energy decomposition evaluated spectrally (kinetic, via Parseval) and by
/// the grid quadrature (pointwise terms).
inline EnergyParts energy_parts(const RingWavefunction& psi, const RingParams& params,
                                std::span<const double> potential, SpectralTransform& transform) {
  const std::size_t g = psi.grid_size();
  std::vector<cplx> modes(g);
  transform.forward(psi.amplitudes(), modes);
  EnergyParts parts;
  for (std::size_t i = 0; i < g; ++i) {
    const double d = mode_number(i, g) - params.eta;
    parts.kinetic += d * d * std::norm(modes[i]);
  }
  parts.kinetic *= psi.spacing() / static_cast<double>(g);
  for (std::size_t j = 0; j < g; ++j) {
    const double rho = std::norm(psi[j]);
    parts.interaction += rho * rho;
    if (!potential.empty()) parts.potential += potential[j] * rho;
  }
  parts.interaction *= params.u_tilde * psi.spacing();
  parts.potential *= psi.spacing();
  return parts;
}

inline EnergyParts energy_parts(const RingWavefunction& psi, const RingParams& params,
                                std::span<const double> potential = {}) {
  SpectralTransform transform(psi.grid_size());
  return energy_parts(psi, params, potential, transform);
}

/// H psi = -(d/dphi - i eta)^2 psi + u~0 |psi|^2 psi (+ V psi). Not normalized.
inline RingWavefunction apply_hamiltonian(const RingWavefunction& psi, const RingParams& params,
                                          std::span<const double> potential = {}) {
  const std::size_t g = psi.grid_size();
  detail::check_potential(potential, g);
  SpectralTransform transform(g);
  std::vector<cplx> modes(g);
  transform.forward(psi.amplitudes(), modes);
  for (std::size_t i = 0; i < g; ++i) {
    const double d = mode_number(i, g) - params.eta;
    modes[i] *= d * d;
  }
  RingWavefunction out(g);
  transform.backward(modes, out.amplitudes());
  for (std::size_t j = 0; j < g; ++j) {
    double local = params.u_tilde * std::norm(psi[j]);
    if (!potential.empty()) local += potential[j];
    out[j] += local * psi[j];
  }
  return out;
}

/// <phi|psi> = sum_j conj(phi_j) psi_j (2 pi / G).
inline cplx inner_product(const RingWavefunction& lhs, const RingWavefunction& rhs) {
  acring::detail::require(lhs.grid_size() == rhs.grid_size(), "grid size mismatch");
  cplx sum = 0.0;
  for (std::size_t j = 0; j < lhs.grid_size(); ++j) sum += std::conj(lhs[j]) * rhs[j];
  return sum * lhs.spacing();
}

/// Winding of the phase around the ring: the sum of principal-branch phase
/// increments between neighboring grid points, divided by 2 pi and rounded.
/// Throws node_error if any |psi_j| < 1e-10 max|psi|.
inline int winding_number(const RingWavefunction& psi) {
  const auto amps = psi.amplitudes();
  double peak = 0.0;
  for (const auto& a : amps) peak = std::max(peak, std::abs(a));
  for (const auto& a : amps) {
    if (!(std::abs(a) >= 1e-10 * peak) || peak == 0.0)
      throw node_error("density node on the grid; winding number undefined");
  }
  double total = 0.0;
  for (std::size_t j = 0; j < amps.size(); ++j) {
    const auto& next = amps[(j + 1) % amps.size()];
    total += std::arg(next * std::conj(amps[j]));
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

/// One imaginary-time trajectory. Exposed so that callers can inspect the
/// state after every step; relax() is the usual entry point.
class ImaginaryTimeStepper {
 public:
  ImaginaryTimeStepper(const RingParams& params, const SolverSettings& settings, RingWavefunction initial,
                       std::vector<double> potential = {})
      : params_(params),
        tau_step_(settings.tau_step),
        psi_(std::move(initial)),
        potential_(std::move(potential)),
        transform_(psi_.grid_size()),
        half_kinetic_(psi_.grid_size()),
        modes_(psi_.grid_size()) {
    settings.validate();
    acring::detail::require(std::isfinite(params.eta) && std::isfinite(params.u_tilde),
                            "ring parameters must be finite");
    detail::check_potential(potential_, psi_.grid_size());
    const std::size_t g = psi_.grid_size();
    for (std::size_t i = 0; i < g; ++i) {
      const double d = mode_number(i, g) - params.eta;
      half_kinetic_[i] = std::exp(-0.5 * tau_step_ * d * d);
    }
    psi_.normalize();
  }

  /// Advances by one tau step and renormalizes.
  void step() {
    const std::size_t g = psi_.grid_size();
    kinetic_half_step();
    for (std::size_t j = 0; j < g; ++j) {
      double local = params_.u_tilde * std::norm(psi_[j]);
      if (!potential_.empty()) local += potential_[j];
      psi_[j] *= std::exp(-tau_step_ * local);
    }
    kinetic_half_step();
    psi_.normalize();
    ++steps_;
  }

  EnergyParts energy() { return energy_parts(psi_, params_, potential_, transform_); }

  const RingWavefunction& state() const { return psi_; }
  long steps() const { return steps_; }

 private:
  void kinetic_half_step() {
    transform_.forward(psi_.amplitudes(), modes_);
    for (std::size_t i = 0; i < modes_.size(); ++i) modes_[i] *= half_kinetic_[i];
    transform_.backward(modes_, psi_.amplitudes());
  }

  RingParams params_;
  double tau_step_;
  RingWavefunction psi_;
  std::vector<double> potential_;
  SpectralTransform transform_;
  std::vector<double> half_kinetic_;
  std::vector<cplx> modes_;
  long steps_ = 0;
};

/// Imaginary-time relaxation from settings.seed_winding. Non-convergence is
/// reported through GroundStateReport::converged.
inline GroundStateReport relax(const RingParams& params, const SolverSettings& settings,
                               std::span<const double> potential = {}) {
  settings.validate();
  auto seed = seed_state(settings.grid_size, settings.seed_winding, settings.noise_amplitude, settings.rng_seed);
  ImaginaryTimeStepper stepper(params, settings, std::move(seed),
                               std::vector<double>(potential.begin(), potential.end()));
  double mu_prev = stepper.energy().mu();
  GroundStateReport report;
  EnergyParts parts;
  for (long it = 0; it < settings.max_iterations; ++it) {
    stepper.step();
    parts = stepper.energy();
    const double mu = parts.mu();
    if (!std::isfinite(mu)) break;
    const double change = std::abs(mu - mu_prev);
    mu_prev = mu;
    if (change <= settings.tolerance * std::max(std::abs(mu), 1.0)) {
      report.converged = true;
      break;
    }
  }
  report.iterations = stepper.steps();
  report.mu = parts.mu();
  report.energy_per_particle = parts.energy();
  report.wavefunction = stepper.state();
  report.winding = winding_number(report.wavefunction);
  return report;
}

/// Nearest integer to eta; ties go up. Only used to center the seed set.
inline int nearest_integer(double eta) { return static_cast<int>(std::floor(eta + 0.5)); }

/// Relative energy window within which two reports count as degenerate. The
/// seeded noise leaves residuals of order 1e-8 at the default tolerance.
inline constexpr double kEnergyTieTolerance = 1e-6;

/// relax() from every seed winding in [eta] - 2 .. [eta] + 2 and keep the
/// lowest energy per particle; ties go to the smaller |winding|, then the
/// smaller winding. Converged runs are preferred; if none converged the best
/// of the unconverged runs is returned with converged == false.
inline GroundStateReport global_ground(const RingParams& params, const SolverSettings& settings,
                                       std::span<const double> potential = {}) {
  settings.validate();
  acring::detail::require(std::isfinite(params.eta), "eta must be finite");
  const int center = nearest_integer(params.eta);
  std::optional<GroundStateReport> best;
  auto better = [](const GroundStateReport& a, const GroundStateReport& b) {
    if (a.converged != b.converged) return a.converged;
    const double scale = std::max({1.0, std::abs(a.energy_per_particle), std::abs(b.energy_per_particle)});
    const double diff = a.energy_per_particle - b.energy_per_particle;
    if (std::abs(diff) > kEnergyTieTolerance * scale) return diff < 0.0;
    if (std::abs(a.winding) != std::abs(b.winding)) return std::abs(a.winding) < std::abs(b.winding);
    return a.winding < b.winding;
  };
  for (int m0 = center - 2; m0 <= center + 2; ++m0) {
    SolverSettings s = settings;
    s.seed_winding = m0;
    auto report = relax(params, s, potential);
    if (!best || better(report, *best)) best = std::move(report);
  }
  return std::move(*best);
}

/// Writes "phi re im" rows, one per grid point, full double precision.
inline void write_wavefunction(std::ostream& out, const RingWavefunction& psi) {
  out << "# phi re_psi im_psi\n";
  char line[96];
  for (std::size_t j = 0; j < psi.grid_size(); ++j) {
    std::snprintf(line, sizeof line, "%.17g %.17g %.17g\n", psi.angle(j), psi[j].real(), psi[j].imag());
    out << line;
  }
}

}  // namespace acring::solver
