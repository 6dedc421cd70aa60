#include "etpc/harness/run.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "etpc/core/errors.hpp"

namespace etpc {

namespace {

VerificationRow make_row(const SweepEntry& entry, const ControllerParams& params, double dt,
                         DifferenceScheme scheme) {
  VerificationRow row;
  row.x0 = entry.x0;
  row.analytic_time = entry.reach.analytic_time;
  row.within_condition = entry.reach.within_condition;
  row.bound_asserted = row.within_condition;
  if (!entry.ok()) {
    row.status = *entry.error;
    return row;
  }
  const auto& traj = *entry.trajectory;
  if (entry.settling->entered) {
    row.empirical_time = entry.settling->time;
  }
  row.bound_satisfied =
      row.empirical_time.has_value() && *row.empirical_time <= params.t_c() + bound_tolerance(dt);
  if (traj.size() >= (scheme == DifferenceScheme::Forward ? 2u : 3u)) {
    row.max_lyapunov_residual = lyapunov_residuals(traj, params, scheme).max_normalized();
  }
  double max_u = 0.0;
  for (const double u : traj.u) {
    max_u = std::max(max_u, std::abs(u));
  }
  row.max_abs_u = max_u;
  return row;
}

std::string trajectory_file_name(const std::string& scenario, std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "_x0_%03zu.csv", index);
  return scenario + buf;
}

void write_text(const std::filesystem::path& path, const auto& writer) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  }
  writer(out);
  if (!out) {
    throw Error(ErrorCode::Io, "failed writing " + path.string());
  }
}

}  // namespace

RunResult run_scenario(const Scenario& scenario, const RunOptions& options) {
  scenario.validate();
  const auto params = scenario.params();
  const auto controller = scenario.build_controller();
  const auto entries = sweep_initial_conditions(Plant(scenario.plant), controller, scenario.x0_list,
                                                scenario.simulation_options(), options.execution);

  RunResult result;
  result.report.scenario = scenario;
  result.report.residual_scheme = options.residual_scheme;
  for (const auto& entry : entries) {
    result.report.rows.push_back(make_row(entry, params, scenario.dt, options.residual_scheme));
  }
  result.report.comparison = comparison_rows(scenario);

  if (options.out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(*options.out_dir, ec);
    if (ec) {
      throw Error(ErrorCode::Io, "cannot create output directory " + options.out_dir->string() + ": " +
                                     ec.message());
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (!entries[i].trajectory) {
        continue;
      }
      const auto path = *options.out_dir / trajectory_file_name(scenario.name, i);
      write_text(path, [&](std::ostream& out) { write_trajectory_csv(*entries[i].trajectory, out); });
      result.report.rows[i].trajectory_file = path.filename().string();
      result.trajectory_files.push_back(path);
    }
    const auto report_path = *options.out_dir / (scenario.name + "_report.yaml");
    write_text(report_path, [&](std::ostream& out) { out << report_to_yaml(result.report); });
    result.report_file = report_path;
  }
  return result;
}

}  // namespace etpc
