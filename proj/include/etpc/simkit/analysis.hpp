#pragma once

#include <optional>
#include <vector>

#include "etpc/core/params.hpp"
#include "etpc/simkit/simulate.hpp"

namespace etpc {

struct SettlingResult {
  bool entered = false;
  /// Earliest grid time after which every remaining sample satisfies |x| <= band.
  std::optional<double> time;
  double band = 0.0;
};

/// Stay-in-band semantics: a dip that later leaves the band does not count.
[[nodiscard]] SettlingResult empirical_settling_time(const Trajectory& traj, double x_s);

enum class DifferenceScheme { Forward, Central };

/**
 * r[i] = dV/dt (finite difference) + 2 ln(x_c / x_s) / T_c * v[i].
 *
 * Zero for the exact proportional closed loop. The forward scheme has a first-order error,
 * about 2 k^2 dt v[i] for gain k; the central scheme is second-order.
 */
struct ResidualSeries {
  DifferenceScheme scheme = DifferenceScheme::Forward;
  std::vector<double> t;
  std::vector<double> r;
  double max_abs = 0.0;
  /// max(v[0], 1)
  double normalization = 1.0;

  [[nodiscard]] double max_normalized() const noexcept { return max_abs / normalization; }
};

/// Throws Error(InsufficientData) for fewer than 2 samples (3 for the central scheme).
[[nodiscard]] ResidualSeries lyapunov_residuals(const Trajectory& traj, const ControllerParams& params,
                                                DifferenceScheme scheme = DifferenceScheme::Forward);

}  // namespace etpc
