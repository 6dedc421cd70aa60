#include "etpc/harness/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>

#include "etpc/core/errors.hpp"
#include "etpc/core/g_conditions.hpp"
#include "etpc/harness/run.hpp"

namespace etpc {

namespace {

std::string fmt(const char* spec, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, value);
  return buf;
}

std::string fmt_opt(const char* spec, const std::optional<double>& value) {
  return value ? fmt(spec, *value) : std::string("-");
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

struct RunArgs {
  std::string scenario;
  std::optional<double> dt;
  std::optional<double> horizon;
  std::string out_dir;
  std::string integrator;
  bool central_diff = false;
  bool sequential = false;
};

std::filesystem::path resolve_out_dir(const std::string& flag) {
  if (!flag.empty()) {
    return flag;
  }
  if (const char* env = std::getenv(kOutDirEnv); env != nullptr && *env != '\0') {
    return env;
  }
  return kDefaultOutDir;
}

int cmd_run(const RunArgs& args, std::ostream& out) {
  Scenario scenario = load_scenario(args.scenario);
  if (args.dt) {
    scenario.dt = *args.dt;
  }
  if (args.horizon) {
    scenario.horizon = *args.horizon;
  }
  if (!args.integrator.empty()) {
    scenario.integrator = *parse_integration_scheme(args.integrator);
  }

  RunOptions options;
  options.out_dir = resolve_out_dir(args.out_dir);
  options.residual_scheme = args.central_diff ? DifferenceScheme::Central : DifferenceScheme::Forward;
  options.execution = args.sequential ? SweepExecution::Sequential : SweepExecution::Parallel;
  const auto result = run_scenario(scenario, options);
  const auto& report = result.report;

  out << "scenario " << scenario.name << ": " << to_string(scenario.plant) << " + "
      << to_string(scenario.controller.kind) << ", T_c = " << scenario.controller.t_c
      << " s, dt = " << scenario.dt << " s, horizon = " << scenario.horizon << " s\n";
  out << pad("x0", 12) << pad("T_analytic", 12) << pad("T_empirical", 12) << pad("in D_c", 8)
      << pad("bound", 8) << pad("residual", 12) << pad("max|u|", 12) << "status\n";
  for (const auto& r : report.rows) {
    const char* bound = !r.bound_asserted ? "n/a" : (r.bound_satisfied ? "ok" : "FAIL");
    out << pad(fmt("%g", r.x0), 12) << pad(fmt("%.6f", r.analytic_time), 12)
        << pad(fmt_opt("%.6f", r.empirical_time), 12) << pad(r.within_condition ? "yes" : "no", 8)
        << pad(bound, 8) << pad(fmt_opt("%.3e", r.max_lyapunov_residual), 12)
        << pad(fmt_opt("%.4g", r.max_abs_u), 12) << r.status << '\n';
  }
  for (const auto& c : report.comparison) {
    out << "advantage at x0 = " << fmt("%g", c.x0) << ": " << fmt("%.6f", c.advantage)
        << (c.advantage_nonnegative ? "" : "  NEGATIVE") << '\n';
  }
  if (result.report_file) {
    out << "report: " << result.report_file->string() << '\n';
  }
  out << "verdict: " << (report.passed() ? "pass" : "fail") << '\n';
  return report.passed() ? kExitOk : kExitVerification;
}

int cmd_gain(double x_c, double x_s, double t_c, std::size_t points, std::ostream& out) {
  const auto params = ControllerParams::create(x_c, x_s, t_c);
  out << "gain " << fmt("%.6f", params.proportional_gain()) << " 1/s\n";
  out << pad("x0", 14) << "T(x0)\n";
  const double lo = std::log(x_s);
  const double hi = std::log(x_c);
  for (std::size_t i = 0; i < points; ++i) {
    const double frac = points == 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(points - 1);
    const double x0 = i + 1 == points ? x_c : (i == 0 ? x_s : std::exp(lo + (hi - lo) * frac));
    out << pad(fmt("%.6g", x0), 14) << fmt("%.6f", practical_reaching_time(params, x0).analytic_time)
        << '\n';
  }
  return kExitOk;
}

int cmd_compare(const std::string& path, std::ostream& out) {
  const Scenario scenario = load_scenario(path);
  if (!scenario.comparison) {
    throw Error(ErrorCode::ScenarioValidation, "comparison: scenario has no comparison block");
  }
  const auto rows = comparison_rows(scenario);
  out << "G = " << scenario.comparison->g << ", m = " << scenario.controller.m
      << ", T_c = " << scenario.controller.t_c << ", x_c = " << scenario.controller.x_c << '\n';
  out << pad("x0", 12) << pad("u_predefined", 16) << pad("u_explicit", 16) << pad("advantage", 14)
      << "nonnegative\n";
  bool ok = true;
  for (const auto& r : rows) {
    out << pad(fmt("%g", r.x0), 12) << pad(fmt("%.6f", r.u_predefined_0), 16)
        << pad(fmt("%.6f", r.u_explicit_0), 16) << pad(fmt("%.6f", r.advantage), 14)
        << (r.advantage_nonnegative ? "yes" : "NO") << '\n';
    ok = ok && !r.failed();
  }
  return ok ? kExitOk : kExitVerification;
}

int cmd_check_g(const std::string& name, double x_c, double m, std::optional<double> x_s,
                const std::string& composition, std::size_t samples, std::ostream& out) {
  const auto g = find_g_candidate(name);
  const auto params = ControllerParams::create(x_c, x_s.value_or(0.1 * x_c), 1.0, m);
  const auto report = verify_g_conditions(g, params, samples, *parse_composition(composition));
  out << report.summary();
  return report.passed() ? kExitOk : kExitVerification;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit-time proportional control: settling-time evaluation and closed-loop verification",
               "etpc"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "simulate a scenario and verify the settling-time bound");
  run->add_option("scenario", run_args.scenario, "scenario YAML file")->required();
  run->add_option("--dt", run_args.dt, "override the integration step (s)");
  run->add_option("--horizon", run_args.horizon, "override the simulated horizon (s)");
  run->add_option("--out-dir", run_args.out_dir,
                  std::string("output directory (default $") + kOutDirEnv + " or " + kDefaultOutDir + ")");
  run->add_option("--integrator", run_args.integrator, "fixed-step scheme")
      ->check(CLI::IsMember({"rk4", "euler"}));
  run->add_flag("--central-diff", run_args.central_diff, "central-difference Lyapunov residuals");
  run->add_flag("--sequential", run_args.sequential, "run the initial-condition sweep on one thread");

  double gain_xc = 0.0;
  double gain_xs = 0.0;
  double gain_tc = 0.0;
  std::size_t gain_points = 7;
  auto* gain = app.add_subcommand("gain", "print the proportional gain and the reaching-time table");
  gain->add_option("x_c", gain_xc, "condition-domain radius")->required();
  gain->add_option("x_s", gain_xs, "accuracy radius")->required();
  gain->add_option("T_c", gain_tc, "time bound (s)")->required();
  gain->add_option("--points", gain_points, "log-spaced x0 grid size")->check(CLI::PositiveNumber);

  std::string compare_path;
  auto* compare = app.add_subcommand("compare", "predefined vs explicit initial-input table");
  compare->add_option("scenario", compare_path, "scenario YAML file with a comparison block")->required();

  std::string g_name;
  double g_xc = 0.0;
  double g_m = 0.0;
  std::optional<double> g_xs;
  std::string g_composition = to_string(Composition::AbsPower);
  std::size_t g_samples = kDefaultConditionSamples;
  auto* check_g = app.add_subcommand("check-g", "sampled admissibility report for a shipped G");
  check_g->add_option("name", g_name, "G candidate name")->required();
  check_g->add_option("x_c", g_xc, "condition-domain radius")->required();
  check_g->add_option("m", g_m, "exponent in (0, 1)")->required();
  check_g->add_option("--x-s", g_xs, "accuracy radius (scaled_half_square only; default x_c / 10)");
  check_g->add_option("--composition", g_composition, "level map")
      ->check(CLI::IsMember({"abs_power", "half_square", "scaled_half_square"}));
  check_g->add_option("--samples", g_samples, "number of samples")->check(CLI::Range(2, 10000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e, out, err);
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*run) {
      return cmd_run(run_args, out);
    }
    if (*gain) {
      return cmd_gain(gain_xc, gain_xs, gain_tc, gain_points, out);
    }
    if (*compare) {
      return cmd_compare(compare_path, out);
    }
    if (*check_g) {
      return cmd_check_g(g_name, g_xc, g_m, g_xs, g_composition, g_samples, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace etpc
