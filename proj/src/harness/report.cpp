#include "etpc/harness/report.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "etpc/core/errors.hpp"

namespace etpc {

std::size_t VerificationReport::failed_rows() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.failed(); }));
}

std::size_t VerificationReport::failed_comparisons() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(comparison.begin(), comparison.end(), [](const auto& r) { return r.failed(); }));
}

std::vector<ComparisonRow> comparison_rows(const Scenario& scenario) {
  std::vector<ComparisonRow> rows;
  if (!scenario.comparison) {
    return rows;
  }
  const auto params = scenario.params();
  const auto g = find_g_candidate(scenario.comparison->g);
  const auto predefined = make_generalized_predefined(g, params, Composition::AbsPower);
  const auto explicit_law = make_generalized_explicit(g, params, Composition::AbsPower);
  for (const double x0 : scenario.x0_list) {
    ComparisonRow row;
    row.x0 = x0;
    row.u_predefined_0 = predefined(x0);
    row.u_explicit_0 = explicit_law(x0);
    row.difference = std::abs(row.u_predefined_0) - std::abs(row.u_explicit_0);
    row.advantage = input_advantage(g, params, x0);
    row.advantage_nonnegative = row.advantage >= -1e-12;
    rows.push_back(row);
  }
  return rows;
}

namespace {

template <class T>
void optional_value(YAML::Emitter& out, const char* key, const std::optional<T>& value) {
  out << YAML::Key << key << YAML::Value;
  if (value) {
    out << *value;
  } else {
    out << YAML::Null;
  }
}

const char* scheme_token(DifferenceScheme scheme) {
  return scheme == DifferenceScheme::Forward ? "forward" : "central";
}

}  // namespace

std::string report_to_yaml(const VerificationReport& report) {
  const auto& s = report.scenario;
  YAML::Emitter out;
  out.SetDoublePrecision(17);
  out << YAML::BeginMap;

  out << YAML::Key << "scenario" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "name" << YAML::Value << s.name;
  out << YAML::Key << "plant" << YAML::Value << to_string(s.plant);
  out << YAML::Key << "controller" << YAML::Value << to_string(s.controller.kind);
  out << YAML::Key << "x_c" << YAML::Value << s.controller.x_c;
  out << YAML::Key << "x_s" << YAML::Value << s.controller.x_s;
  out << YAML::Key << "T_c" << YAML::Value << s.controller.t_c;
  out << YAML::Key << "m" << YAML::Value << s.controller.m;
  optional_value(out, "g", s.controller.g);
  out << YAML::Key << "dt" << YAML::Value << s.dt;
  out << YAML::Key << "horizon" << YAML::Value << s.horizon;
  out << YAML::Key << "integrator" << YAML::Value << to_string(s.integrator);
  out << YAML::Key << "residual_scheme" << YAML::Value << scheme_token(report.residual_scheme);
  out << YAML::EndMap;

  out << YAML::Key << "summary" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "rows" << YAML::Value << report.rows.size();
  out << YAML::Key << "asserted_rows" << YAML::Value
      << std::count_if(report.rows.begin(), report.rows.end(), [](const auto& r) { return r.bound_asserted; });
  out << YAML::Key << "failed_rows" << YAML::Value << report.failed_rows();
  out << YAML::Key << "comparison_rows" << YAML::Value << report.comparison.size();
  out << YAML::Key << "failed_comparisons" << YAML::Value << report.failed_comparisons();
  out << YAML::Key << "verdict" << YAML::Value << (report.passed() ? "pass" : "fail");
  out << YAML::EndMap;

  out << YAML::Key << "rows" << YAML::Value << YAML::BeginSeq;
  for (const auto& r : report.rows) {
    out << YAML::BeginMap;
    out << YAML::Key << "x0" << YAML::Value << r.x0;
    out << YAML::Key << "analytic_time" << YAML::Value << r.analytic_time;
    optional_value(out, "empirical_time", r.empirical_time);
    out << YAML::Key << "within_condition" << YAML::Value << r.within_condition;
    out << YAML::Key << "bound_asserted" << YAML::Value << r.bound_asserted;
    out << YAML::Key << "bound_satisfied" << YAML::Value << r.bound_satisfied;
    optional_value(out, "max_lyapunov_residual", r.max_lyapunov_residual);
    optional_value(out, "max_abs_u", r.max_abs_u);
    out << YAML::Key << "status" << YAML::Value << r.status;
    out << YAML::Key << "trajectory_file" << YAML::Value << r.trajectory_file;
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;

  out << YAML::Key << "comparison" << YAML::Value << YAML::BeginSeq;
  for (const auto& c : report.comparison) {
    out << YAML::BeginMap;
    out << YAML::Key << "x0" << YAML::Value << c.x0;
    out << YAML::Key << "u_predefined_0" << YAML::Value << c.u_predefined_0;
    out << YAML::Key << "u_explicit_0" << YAML::Value << c.u_explicit_0;
    out << YAML::Key << "difference" << YAML::Value << c.difference;
    out << YAML::Key << "advantage" << YAML::Value << c.advantage;
    out << YAML::Key << "advantage_nonnegative" << YAML::Value << c.advantage_nonnegative;
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;

  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
  out << "t,x,u,V\n";
  out << std::setprecision(17);
  for (std::size_t i = 0; i < traj.size(); ++i) {
    out << traj.t[i] << ',' << traj.x[i] << ',' << traj.u[i] << ',' << traj.v[i] << '\n';
  }
}

Trajectory read_trajectory_csv(std::istream& in, double x_s) {
  std::string line;
  if (!std::getline(in, line) || line != "t,x,u,V") {
    throw Error(ErrorCode::ScenarioParse, "trajectory file must start with the header 't,x,u,V'");
  }
  Trajectory traj;
  traj.x_s = x_s;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    std::istringstream row(line);
    double values[4];
    char sep = ',';
    for (int k = 0; k < 4; ++k) {
      if ((k > 0 && (!(row >> sep) || sep != ',')) || !(row >> values[k])) {
        throw Error(ErrorCode::ScenarioParse, "malformed trajectory row at line " + std::to_string(line_no));
      }
    }
    traj.t.push_back(values[0]);
    traj.x.push_back(values[1]);
    traj.u.push_back(values[2]);
    traj.v.push_back(values[3]);
  }
  if (traj.size() >= 2) {
    traj.dt = traj.t[1] - traj.t[0];
  }
  return traj;
}

}  // namespace etpc
