#include "etpc/simkit/simulate.hpp"

#include <spdlog/spdlog.h>

#include <cmath>
#include <sstream>

namespace etpc {

const char* to_string(IntegrationScheme scheme) noexcept {
  switch (scheme) {
    case IntegrationScheme::Rk4:
      return "rk4";
    case IntegrationScheme::Euler:
      return "euler";
  }
  return "unknown";
}

std::optional<IntegrationScheme> parse_integration_scheme(std::string_view token) noexcept {
  for (auto s : {IntegrationScheme::Rk4, IntegrationScheme::Euler}) {
    if (token == to_string(s)) {
      return s;
    }
  }
  return std::nullopt;
}

bool step_size_within_stability_limit(const Controller& controller, double dt) noexcept {
  if (!is_proportional(controller.kind())) {
    return true;
  }
  return dt * std::abs(controller.gain()) < 2.0;
}

namespace {

std::size_t step_count(double dt, double horizon) {
  if (!(dt > 0.0) || !(horizon > 0.0) || !std::isfinite(dt) || !std::isfinite(horizon)) {
    std::ostringstream os;
    os << "dt and horizon must be positive and finite (dt = " << dt << ", horizon = " << horizon << ")";
    throw Error(ErrorCode::InvalidParameter, os.str());
  }
  if (dt > horizon) {
    std::ostringstream os;
    os << "dt (" << dt << ") exceeds the horizon (" << horizon << ")";
    throw Error(ErrorCode::InvalidParameter, os.str());
  }
  // Tolerate horizons that are an integer multiple of dt up to rounding.
  return static_cast<std::size_t>(std::floor(horizon / dt + 1e-9));
}

}  // namespace

Trajectory simulate(const Plant& plant, const Controller& controller, double x0,
                    const SimulationOptions& options) {
  const double dt = options.dt;
  const std::size_t steps = step_count(dt, options.horizon);
  if (!std::isfinite(x0)) {
    throw Error(ErrorCode::InvalidParameter, "initial state must be finite");
  }
  if (!step_size_within_stability_limit(controller, dt)) {
    spdlog::warn("dt * |gain| = {} >= 2: the fixed-step discretization of the {} loop may be unstable",
                 dt * std::abs(controller.gain()), to_string(controller.kind()));
  }

  const auto field = [&](double x) { return plant.drift(x) + controller(x); };
  const double x_s = controller.params().x_s();

  Trajectory traj;
  traj.dt = dt;
  traj.x_s = x_s;
  traj.t.reserve(steps + 1);
  traj.x.reserve(steps + 1);
  traj.u.reserve(steps + 1);
  traj.v.reserve(steps + 1);

  double x = x0;
  for (std::size_t i = 0;; ++i) {
    traj.t.push_back(static_cast<double>(i) * dt);
    traj.x.push_back(x);
    traj.u.push_back(controller(x));
    traj.v.push_back(practical_lyapunov(x, x_s));
    if (i == steps) {
      break;
    }
    switch (options.scheme) {
      case IntegrationScheme::Rk4: {
        const double k1 = field(x);
        const double k2 = field(x + 0.5 * dt * k1);
        const double k3 = field(x + 0.5 * dt * k2);
        const double k4 = field(x + dt * k3);
        x += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        break;
      }
      case IntegrationScheme::Euler:
        x += dt * field(x);
        break;
    }
    if (!std::isfinite(x)) {
      throw DivergenceError(i + 1, "state became non-finite");
    }
  }
  return traj;
}

}  // namespace etpc
