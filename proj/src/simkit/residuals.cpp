#include "etpc/simkit/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "etpc/core/errors.hpp"

namespace etpc {

ResidualSeries lyapunov_residuals(const Trajectory& traj, const ControllerParams& params,
                                  DifferenceScheme scheme) {
  const std::size_t n = traj.size();
  const std::size_t needed = scheme == DifferenceScheme::Forward ? 2 : 3;
  if (n < needed) {
    throw Error(ErrorCode::InsufficientData, "lyapunov_residuals needs at least " +
                                                 std::to_string(needed) + " samples, got " +
                                                 std::to_string(n));
  }
  const double rate = 2.0 * params.proportional_gain();
  const double dt = traj.dt;
  const auto& v = traj.v;

  ResidualSeries out;
  out.scheme = scheme;
  out.normalization = std::max(v.front(), 1.0);
  if (scheme == DifferenceScheme::Forward) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      out.t.push_back(traj.t[i]);
      out.r.push_back((v[i + 1] - v[i]) / dt + rate * v[i]);
    }
  } else {
    for (std::size_t i = 1; i + 1 < n; ++i) {
      out.t.push_back(traj.t[i]);
      out.r.push_back((v[i + 1] - v[i - 1]) / (2.0 * dt) + rate * v[i]);
    }
  }
  for (const double r : out.r) {
    out.max_abs = std::max(out.max_abs, std::abs(r));
  }
  return out;
}

}  // namespace etpc
