#pragma once

// Parameter sweeps over eta: the zero-temperature winding staircase with its
// classical and finite-temperature companions, the two-mode stability
// landscape, and a quasi-static hysteresis experiment.

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "acring/error.hpp"
#include "acring/reduction.hpp"
#include "acring/ring.hpp"
#include "acring/solver.hpp"

namespace acring::sweeps {

/// start, start + step, ... up to and including stop. A point that lands on
/// stop up to rounding is kept; the grid never runs past stop. Points are
/// start + i * step.
inline std::vector<double> linear_grid(double start, double stop, double step) {
  detail::require(std::isfinite(start) && std::isfinite(stop), "range endpoints must be finite");
  detail::require(std::isfinite(step) && step > 0.0, "range step must be > 0");
  detail::require(stop >= start, "range stop must not precede start");
  const auto intervals = static_cast<long>(std::floor((stop - start) / step + 1e-9));
  detail::require(intervals < 10'000'000, "range has too many points");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(intervals) + 1);
  for (long i = 0; i <= intervals; ++i) grid.push_back(start + static_cast<double>(i) * step);
  return grid;
}

enum class StaircaseMode { analytic, numeric };

struct StaircaseSpec {
  double eta_start = 0.0;
  double eta_stop = 3.0;
  double eta_step = 0.05;
  double u_tilde = 4.0 * std::numbers::pi;
  StaircaseMode mode = StaircaseMode::analytic;
  double condensate_weight = 1.0;  // w: 1 is the pure T = 0 staircase, 0 the classical line
  solver::SolverSettings solver = solver::SolverSettings::global_search();

  void validate() const {
    detail::require(std::isfinite(eta_step) && eta_step > 0.0, "eta step must be > 0");
    detail::require(condensate_weight >= 0.0 && condensate_weight <= 1.0, "condensate weight must lie in [0, 1]");
    detail::require(std::isfinite(u_tilde), "u_tilde must be finite");
    if (mode == StaircaseMode::numeric) solver.validate();
  }
};

struct SweepRecord {
  double eta = 0.0;
  int winding_T0 = 0;
  double classical_mean = 0.0;  // <m> of a non-condensed gas, equal to eta
  double thermal_mean = 0.0;    // w * winding_T0 + (1 - w) * eta
  double mu_eff = 0.0;
  bool degenerate = false;
  bool converged = true;  // numeric mode only
};

/// Condensate-weighted average of the quantized and classical angular momentum.
inline double thermal_mean(int winding, double eta, double weight) {
  return weight * winding + (1.0 - weight) * eta;
}

inline SweepRecord staircase_point(double eta, const StaircaseSpec& spec) {
  const RingParams params{eta, spec.u_tilde, 0.0};
  const auto analytic = ring::ground_winding(params);
  SweepRecord rec;
  rec.eta = eta;
  rec.classical_mean = eta;
  rec.degenerate = analytic.degenerate;
  if (spec.mode == StaircaseMode::analytic) {
    rec.winding_T0 = analytic.winding;
    rec.mu_eff = analytic.mu_eff;
  } else {
    const auto report = solver::global_ground(params, spec.solver);
    rec.winding_T0 = report.winding;
    rec.mu_eff = report.mu;
    rec.converged = report.converged;
    // Both neighbors are exact ground states here; report the lower one.
    if (rec.degenerate && (report.winding == analytic.winding || report.winding == analytic.winding + 1))
      rec.winding_T0 = analytic.winding;
  }
  rec.thermal_mean = thermal_mean(rec.winding_T0, eta, spec.condensate_weight);
  return rec;
}

/// One record per grid point, in increasing eta. Numeric-mode points that
/// fail to converge are kept and flagged through SweepRecord::converged.
inline std::vector<SweepRecord> staircase(const StaircaseSpec& spec) {
  spec.validate();
  std::vector<SweepRecord> records;
  for (double eta : linear_grid(spec.eta_start, spec.eta_stop, spec.eta_step))
    records.push_back(staircase_point(eta, spec));
  return records;
}

struct LandscapePoint {
  double x = 0.0;
  double mu_eff = 0.0;
};

/// mu_mixed along the m -> m+1 path at one eta.
struct LandscapeCurve {
  double eta = 0.0;
  int winding = 0;
  std::vector<LandscapePoint> points;
  std::optional<ring::Barrier> barrier;
};

/// Tabulates mu_mixed on x = i / n, i = 0..n, with n = ceil(1 / x_step) so
/// both endpoints are hit exactly and the spacing never exceeds x_step.
inline std::vector<LandscapeCurve> landscape(int m, std::span<const double> eta_values, double u_tilde,
                                             double x_step) {
  detail::require(std::isfinite(x_step) && x_step > 0.0 && x_step <= 1.0, "x step must lie in (0, 1]");
  detail::require(std::isfinite(u_tilde) && u_tilde > 0.0, "landscape requires u_tilde > 0");
  for (std::size_t i = 1; i < eta_values.size(); ++i)
    detail::require(eta_values[i] > eta_values[i - 1], "eta values must be strictly increasing");
  const auto n = static_cast<long>(std::ceil(1.0 / x_step - 1e-9));
  std::vector<LandscapeCurve> curves;
  curves.reserve(eta_values.size());
  for (double eta : eta_values) {
    const RingParams params{eta, u_tilde, 0.0};
    LandscapeCurve curve;
    curve.eta = eta;
    curve.winding = m;
    curve.points.reserve(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
      const double x = static_cast<double>(i) / static_cast<double>(n);
      curve.points.push_back({x, ring::mu_mixed({m, x, 0.0}, params)});
    }
    curve.barrier = ring::barrier(m, params);
    curves.push_back(std::move(curve));
  }
  return curves;
}

enum class Direction { up, down };

struct HysteresisRecord {
  double eta = 0.0;
  Direction direction = Direction::up;
  int winding = 0;
  std::optional<double> barrier_height;
};

/// Carries a winding quasi-statically along `eta_path`.
///
/// While eta is beyond m + 1/2 (or below m - 1/2) the neighbor on that side
/// is lower in energy. The state stays put as long as the two-mode path to
/// that neighbor has an interior peak, and slides over once the peak leaves
/// (0, 1), repeating until it rests. Each record carries the winding after
/// the update and the barrier height, measured from the winding held on
/// arrival, toward the neighbor on eta's side; the height is absent where
/// there is no interior peak, which includes every point where the winding
/// changed.
inline std::vector<HysteresisRecord> hysteresis(std::span<const double> eta_path, double u_tilde,
                                                int start_winding) {
  detail::require(std::isfinite(u_tilde) && u_tilde > 0.0, "hysteresis requires u_tilde > 0");
  for (double eta : eta_path) detail::require(std::isfinite(eta), "eta path must be finite");
  for (std::size_t i = 1; i < eta_path.size(); ++i)
    detail::require(std::abs(eta_path[i] - eta_path[i - 1]) <= 1.0, "eta path steps must not exceed 1");

  std::vector<HysteresisRecord> records;
  records.reserve(eta_path.size());
  int m = start_winding;
  Direction direction = Direction::up;
  for (std::size_t i = 0; i < eta_path.size(); ++i) {
    const double eta = eta_path[i];
    if (i > 0 && eta != eta_path[i - 1]) direction = eta > eta_path[i - 1] ? Direction::up : Direction::down;
    if (i == 0 && eta_path.size() > 1 && eta_path[1] < eta) direction = Direction::down;

    const RingParams params{eta, u_tilde, 0.0};
    HysteresisRecord rec;
    rec.eta = eta;
    rec.direction = direction;
    bool moved = false;
    for (;;) {
      if (eta > m + 0.5) {
        if (auto b = ring::barrier(m, params)) {
          if (!moved) rec.barrier_height = b->height_from_m;
          break;
        }
        ++m;
      } else if (eta < m - 0.5) {
        if (auto b = ring::barrier(m - 1, params)) {
          if (!moved) rec.barrier_height = b->height_from_m_plus_1;
          break;
        }
        --m;
      } else {
        if (!moved) {
          auto b = eta >= m ? ring::barrier(m, params) : ring::barrier(m - 1, params);
          if (b) rec.barrier_height = eta >= m ? b->height_from_m : b->height_from_m_plus_1;
        }
        break;
      }
      moved = true;
    }
    rec.winding = m;
    records.push_back(rec);
  }
  return records;
}

/// eta_path followed by its reverse, without repeating the turning point.
inline std::vector<double> round_trip(std::span<const double> forward) {
  std::vector<double> path(forward.begin(), forward.end());
  for (auto it = forward.rbegin() + (forward.empty() ? 0 : 1); it != forward.rend(); ++it) path.push_back(*it);
  return path;
}

}  // namespace acring::sweeps
