#include "etpc/simkit/analysis.hpp"

#include <cmath>

#include "etpc/core/errors.hpp"

namespace etpc {

SettlingResult empirical_settling_time(const Trajectory& traj, double x_s) {
  if (traj.empty()) {
    throw Error(ErrorCode::InsufficientData, "empty trajectory");
  }
  SettlingResult result{false, std::nullopt, x_s};
  // Walk back from the end to the last sample outside the band.
  std::size_t first_settled = traj.size();
  while (first_settled > 0 && std::abs(traj.x[first_settled - 1]) <= x_s) {
    --first_settled;
  }
  if (first_settled < traj.size()) {
    result.entered = true;
    result.time = traj.t[first_settled];
  }
  return result;
}

}  // namespace etpc
