#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "etpc/controllers/controller.hpp"
#include "etpc/simkit/plant.hpp"

namespace etpc {

enum class IntegrationScheme { Rk4, Euler };

[[nodiscard]] const char* to_string(IntegrationScheme scheme) noexcept;
[[nodiscard]] std::optional<IntegrationScheme> parse_integration_scheme(std::string_view token) noexcept;

/// Uniformly sampled closed-loop record. t[i] = i * dt, v[i] = x[i]^2 / (2 x_s^2).
struct Trajectory {
  double dt = 0.0;
  double x_s = 0.0;
  std::vector<double> t;
  std::vector<double> x;
  std::vector<double> u;
  std::vector<double> v;

  [[nodiscard]] std::size_t size() const noexcept { return t.size(); }
  [[nodiscard]] bool empty() const noexcept { return t.empty(); }

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

/// V = x^2 / (2 x_s^2)
[[nodiscard]] inline double practical_lyapunov(double x, double x_s) noexcept {
  const double r = x / x_s;
  return 0.5 * r * r;
}

struct SimulationOptions {
  double dt = 1e-3;
  double horizon = 2.0;
  IntegrationScheme scheme = IntegrationScheme::Rk4;
};

/// dt * |closed-loop gain| < 2 for proportional laws; always true for the generalized kinds.
[[nodiscard]] bool step_size_within_stability_limit(const Controller& controller, double dt) noexcept;

/**
 * Integrates xdot = drift(x) + u(x) on the grid 0, dt, ..., floor(horizon / dt) * dt.
 *
 * Throws Error(InvalidParameter) for non-positive dt/horizon or dt > horizon and
 * DivergenceError when the state stops being finite. A step size outside the proportional
 * stability limit is logged as a warning, not rejected.
 */
[[nodiscard]] Trajectory simulate(const Plant& plant, const Controller& controller, double x0,
                                  const SimulationOptions& options);

}  // namespace etpc
