#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "etpc/harness/scenario.hpp"
#include "etpc/simkit/analysis.hpp"

namespace etpc {

struct VerificationRow {
  double x0 = 0.0;
  double analytic_time = 0.0;
  std::optional<double> empirical_time;
  bool within_condition = false;
  /// Only rows inside the condition domain carry the time-bound assertion.
  bool bound_asserted = false;
  /// empirical_time <= T_c + 2 dt
  bool bound_satisfied = false;
  std::optional<double> max_lyapunov_residual;
  std::optional<double> max_abs_u;
  /// "ok", or the error that ended this row's simulation.
  std::string status = "ok";
  std::string trajectory_file;

  [[nodiscard]] bool failed() const noexcept { return bound_asserted && !bound_satisfied; }
};

struct ComparisonRow {
  double x0 = 0.0;
  double u_predefined_0 = 0.0;
  double u_explicit_0 = 0.0;
  /// |u_predefined_0| - |u_explicit_0| from the two controllers.
  double difference = 0.0;
  /// Closed-form gap.
  double advantage = 0.0;
  /// advantage >= -1e-12
  bool advantage_nonnegative = false;

  [[nodiscard]] bool failed() const noexcept { return !advantage_nonnegative; }
};

struct VerificationReport {
  Scenario scenario;
  DifferenceScheme residual_scheme = DifferenceScheme::Forward;
  std::vector<VerificationRow> rows;
  std::vector<ComparisonRow> comparison;

  [[nodiscard]] std::size_t failed_rows() const noexcept;
  [[nodiscard]] std::size_t failed_comparisons() const noexcept;
  /// True iff no asserted row failed.
  [[nodiscard]] bool passed() const noexcept { return failed_rows() == 0 && failed_comparisons() == 0; }
};

/// Slack on the empirical bound check: one grid step of quantization on each side.
[[nodiscard]] inline double bound_tolerance(double dt) noexcept { return 2.0 * dt; }

[[nodiscard]] std::vector<ComparisonRow> comparison_rows(const Scenario& scenario);

/// Key-value tree with a fixed field order.
[[nodiscard]] std::string report_to_yaml(const VerificationReport& report);

/// Header "t,x,u,V", one row per grid point, 17 significant digits.
void write_trajectory_csv(const Trajectory& traj, std::ostream& out);
[[nodiscard]] Trajectory read_trajectory_csv(std::istream& in, double x_s);

}  // namespace etpc
