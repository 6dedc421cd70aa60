#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "etpc/simkit/analysis.hpp"
#include "etpc/simkit/plant.hpp"
#include "etpc/simkit/simulate.hpp"
#include "etpc/simkit/sweep.hpp"
#include "oracles.hpp"

using namespace etpc;
using Catch::Approx;

namespace {

ControllerParams reference_params() { return ControllerParams::create(100.0, 0.1, 1.0); }

Trajectory reference_run(double x0, double dt = 1e-3, double horizon = 2.0) {
  return simulate(Plant::unstable_linear(), make_plant_compensating(reference_params()), x0,
                  SimulationOptions{dt, horizon, IntegrationScheme::Rk4});
}

Trajectory hand_made(std::vector<double> x, double dt, double x_s) {
  Trajectory traj;
  traj.dt = dt;
  traj.x_s = x_s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    traj.t.push_back(static_cast<double>(i) * dt);
    traj.u.push_back(0.0);
    traj.v.push_back(practical_lyapunov(x[i], x_s));
  }
  traj.x = std::move(x);
  return traj;
}

// Forward-difference residual of an exact exponential, normalized by v0:
// (exp(-2 k dt) - 1) / dt + 2 k.
double forward_residual_closed_form(double k, double dt) { return std::expm1(-2.0 * k * dt) / dt + 2.0 * k; }

}  // namespace

TEST_CASE("simulation grid and trivial trajectories", "[simkit]") {
  const auto traj = reference_run(0.0);
  REQUIRE(traj.size() == 2001);
  CHECK(traj.t.front() == 0.0);
  CHECK(traj.t.back() == Approx(2.0).epsilon(1e-15));
  for (std::size_t i = 0; i < traj.size(); ++i) {
    CHECK(traj.x[i] == 0.0);
    CHECK(traj.u[i] == 0.0);
    CHECK(traj.v[i] == 0.0);
  }
  const auto residual = lyapunov_residuals(traj, reference_params());
  CHECK(residual.max_abs == 0.0);
  CHECK(residual.normalization == 1.0);
}

TEST_CASE("simulation rejects bad step settings", "[simkit]") {
  const auto c = make_explicit_proportional(reference_params());
  for (const auto& opts : {SimulationOptions{0.0, 1.0}, SimulationOptions{-1e-3, 1.0}, SimulationOptions{1e-3, 0.0},
                           SimulationOptions{0.5, 0.25}, SimulationOptions{std::nan(""), 1.0}}) {
    try {
      (void)simulate(Plant::integrator(), c, 1.0, opts);
      FAIL("expected InvalidParameter");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidParameter);
    }
  }
}

TEST_CASE("reference scenario follows the exponential oracle", "[simkit]") {
  const double k = std::log(1000.0);
  for (const double x0 : {100.0, -100.0, 50.0, -10.0}) {
    const auto traj = reference_run(x0);
    for (std::size_t i = 0; i < traj.size(); ++i) {
      CHECK(std::abs(traj.x[i] - oracle::exponential_decay(x0, k, traj.t[i])) < 1e-6 * std::abs(x0));
    }
  }
  const auto traj = reference_run(100.0);
  CHECK(traj.x[1000] == Approx(0.1).epsilon(1e-9));
  CHECK(traj.u[0] == Approx(-790.775527898213705).epsilon(1e-14));
}

TEST_CASE("empirical settling time", "[simkit]") {
  SECTION("constant inside the band") {
    const auto r = empirical_settling_time(hand_made({0.05, 0.05, 0.05}, 0.5, 0.1), 0.1);
    CHECK(r.entered);
    CHECK(r.time == 0.0);
  }
  SECTION("never enters") {
    const auto r = empirical_settling_time(hand_made({5.0, 4.0, 3.0}, 0.5, 0.1), 0.1);
    CHECK_FALSE(r.entered);
    CHECK_FALSE(r.time.has_value());
  }
  SECTION("dip then leave then re-enter") {
    const auto r = empirical_settling_time(hand_made({5.0, 0.05, 5.0, 0.05, 0.05}, 1.0, 0.1), 0.1);
    CHECK(r.entered);
    CHECK(r.time == 3.0);
  }
  SECTION("band edge counts as inside") {
    const auto r = empirical_settling_time(hand_made({1.0, 0.1, 0.1}, 1.0, 0.1), 0.1);
    CHECK(r.time == 1.0);
  }
  SECTION("reference scenario") {
    const double dt = 1e-3;
    const auto r = empirical_settling_time(reference_run(100.0), 0.1);
    REQUIRE(r.time.has_value());
    CHECK(*r.time >= 1.0 - 2 * dt);
    CHECK(*r.time <= 1.0 + 2 * dt);
  }
  SECTION("empty trajectory") {
    try {
      (void)empirical_settling_time(Trajectory{}, 0.1);
      FAIL("expected InsufficientData");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InsufficientData);
    }
  }
}

TEST_CASE("Lyapunov residuals match the finite-difference error model", "[simkit]") {
  const double k = std::log(1000.0);
  // Independent value of the closed form at dt = 1e-3 (50-digit arithmetic).
  CHECK(forward_residual_closed_form(k, 1e-3) == Approx(0.0949961891747457).epsilon(1e-12));

  for (const double dt : {1e-3, 2e-3, 4e-3, 5e-4}) {
    const auto res = lyapunov_residuals(reference_run(100.0, dt), reference_params());
    CHECK(res.normalization == Approx(5e5));
    CHECK(res.max_normalized() == Approx(forward_residual_closed_form(k, dt)).epsilon(1e-6));
  }
  const auto r1 = lyapunov_residuals(reference_run(100.0, 1e-3), reference_params()).max_normalized();
  const auto r2 = lyapunov_residuals(reference_run(100.0, 2e-3), reference_params()).max_normalized();
  const auto r4 = lyapunov_residuals(reference_run(100.0, 4e-3), reference_params()).max_normalized();
  CHECK(r2 / r1 == Approx(2.0).epsilon(0.2));
  CHECK(r4 / r2 == Approx(2.0).epsilon(0.2));

  const auto central = lyapunov_residuals(reference_run(100.0), reference_params(), DifferenceScheme::Central);
  CHECK(central.max_normalized() < 1e-2);
  // First central sample sits at i = 1: exp(-2 k dt) * (sinh(2 k dt) / dt - 2 k).
  const double h = 2.0 * k * 1e-3;
  CHECK(central.max_normalized() == Approx(std::exp(-h) * (std::sinh(h) / 1e-3 - 2.0 * k)).epsilon(1e-6));
  CHECK(central.r.size() == 1999);
}

TEST_CASE("residuals need enough samples", "[simkit]") {
  const auto p = reference_params();
  CHECK_THROWS_AS(lyapunov_residuals(hand_made({1.0}, 1e-3, 0.1), p), Error);
  CHECK_NOTHROW(lyapunov_residuals(hand_made({1.0, 0.9}, 1e-3, 0.1), p));
  try {
    (void)lyapunov_residuals(hand_made({1.0, 0.9}, 1e-3, 0.1), p, DifferenceScheme::Central);
    FAIL("expected InsufficientData");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsufficientData);
  }
}

TEST_CASE("plant-compensating loop equals the integrator loop", "[simkit][property]") {
  for (int trial = 0; trial < 50; ++trial) {
    const double x_c = oracle::log_uniform(0.1, 100.0);
    const auto p = ControllerParams::create(x_c, x_c * oracle::uniform(1e-4, 0.5), oracle::log_uniform(0.1, 10.0));
    const double x0 = oracle::uniform(-x_c, x_c);
    const SimulationOptions opts{1e-3 * p.t_c(), 1.5 * p.t_c()};
    const auto a = simulate(Plant::integrator(), make_explicit_proportional(p), x0, opts);
    const auto b = simulate(Plant::unstable_linear(), make_plant_compensating(p), x0, opts);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(std::abs(a.x[i] - b.x[i]) <= 1e-12 * std::abs(x0));
    }
  }
}

TEST_CASE("proportional trajectories never cross zero", "[simkit][property]") {
  for (int trial = 0; trial < 50; ++trial) {
    const double x_c = oracle::log_uniform(0.1, 100.0);
    const auto p = ControllerParams::create(x_c, x_c * oracle::uniform(1e-4, 0.5), oracle::log_uniform(0.1, 10.0));
    const double x0 = oracle::uniform(-x_c, x_c);
    for (const auto scheme : {IntegrationScheme::Rk4, IntegrationScheme::Euler}) {
      const auto traj = simulate(Plant::integrator(), make_explicit_proportional(p), x0,
                                 SimulationOptions{1e-3 * p.t_c(), 2.0 * p.t_c(), scheme});
      bool preserved = true;
      for (std::size_t i = 1; i < traj.size(); ++i) {
        preserved = preserved && traj.x[i] * x0 >= 0.0 && std::abs(traj.x[i]) <= std::abs(traj.x[i - 1]);
      }
      CHECK(preserved);
    }
  }
}

TEST_CASE("simulation is deterministic", "[simkit]") {
  const auto c = make_generalized_explicit(g::bounded_exp(), ControllerParams::create(4.0, 0.1, 1.0, 0.5));
  const SimulationOptions opts{1e-3, 2.0};
  const auto a = simulate(Plant::integrator(), c, 3.0, opts);
  const auto b = simulate(Plant::integrator(), c, 3.0, opts);
  CHECK(a == b);
}

TEST_CASE("divergence is reported with its step", "[simkit]") {
  const auto c = make_plant_compensating(reference_params());
  CHECK(step_size_within_stability_limit(c, 1e-3));
  CHECK_FALSE(step_size_within_stability_limit(c, 0.5));
  // Euler factor 1 - k dt = -2.45: overflow after roughly 790 steps.
  try {
    (void)simulate(Plant::unstable_linear(), c, 100.0, SimulationOptions{0.5, 500.0, IntegrationScheme::Euler});
    FAIL("expected DivergenceError");
  } catch (const DivergenceError& e) {
    CHECK(e.code() == ErrorCode::Divergence);
    CHECK(e.step() > 700);
    CHECK(e.step() < 1000);
  }
}

TEST_CASE("sweep over initial conditions", "[simkit]") {
  const auto c = make_plant_compensating(reference_params());
  const std::vector<double> x0s{100.0, -100.0, 50.0, -50.0, 10.0, -10.0, 0.05, 0.0};
  const SimulationOptions opts{1e-3, 2.0};
  const auto entries = sweep_initial_conditions(Plant::unstable_linear(), c, x0s, opts);
  REQUIRE(entries.size() == x0s.size());
  for (std::size_t i = 0; i < x0s.size(); ++i) {
    const auto& e = entries[i];
    INFO("x0 = " << x0s[i]);
    CHECK(e.x0 == x0s[i]);
    REQUIRE(e.ok());
    REQUIRE(e.settling.has_value());
    REQUIRE(e.settling->time.has_value());
    CHECK(e.reach.analytic_time == Approx(practical_reaching_time(reference_params(), x0s[i]).analytic_time));
    CHECK(*e.settling->time <= e.reach.analytic_time + 2 * opts.dt);
    CHECK(*e.settling->time >= e.reach.analytic_time - 2 * opts.dt);
  }
  CHECK(*entries[0].settling->time == Approx(1.0).margin(2e-3));
  CHECK(*entries[2].settling->time == Approx(std::log(500.0) / std::log(1000.0)).margin(2e-3));
  CHECK(*entries[6].settling->time == 0.0);

  const auto sequential = sweep_initial_conditions(Plant::unstable_linear(), c, x0s, opts, SweepExecution::Sequential);
  for (std::size_t i = 0; i < x0s.size(); ++i) {
    CHECK(sequential[i].trajectory == entries[i].trajectory);
    CHECK(sequential[i].settling->time == entries[i].settling->time);
  }
}

TEST_CASE("sweep isolates a diverging run", "[simkit]") {
  const auto c = make_plant_compensating(reference_params());
  const std::vector<double> x0s{100.0, 0.0};
  const auto entries = sweep_initial_conditions(Plant::unstable_linear(), c, x0s,
                                                SimulationOptions{0.5, 500.0, IntegrationScheme::Euler});
  CHECK_FALSE(entries[0].ok());
  CHECK(entries[0].diverged_at_step.has_value());
  CHECK(entries[1].ok());
}

TEST_CASE("empirical settling never exceeds the analytic time plus two steps", "[simkit][property]") {
  for (int trial = 0; trial < 200; ++trial) {
    const double x_c = oracle::log_uniform(0.1, 100.0);
    const auto p = ControllerParams::create(x_c, x_c * oracle::log_uniform(1e-5, 0.5), oracle::log_uniform(0.1, 10.0));
    const double x0 = oracle::uniform(-x_c, x_c);
    const double dt = 1e-3 * p.t_c();
    const auto traj = simulate(Plant::integrator(), make_explicit_proportional(p), x0,
                               SimulationOptions{dt, 1.2 * p.t_c()});
    const auto settled = empirical_settling_time(traj, p.x_s());
    const double analytic = practical_reaching_time(p, x0).analytic_time;
    INFO("x_c=" << x_c << " x_s=" << p.x_s() << " T_c=" << p.t_c() << " x0=" << x0);
    REQUIRE(settled.time.has_value());
    CHECK(*settled.time <= analytic + 2 * dt);
    CHECK(analytic <= p.t_c());
  }
}

TEST_CASE("scheme and plant tokens round-trip", "[simkit]") {
  for (auto s : {IntegrationScheme::Rk4, IntegrationScheme::Euler}) {
    CHECK(parse_integration_scheme(to_string(s)) == s);
  }
  for (auto k : {PlantKind::Integrator, PlantKind::UnstableLinear}) {
    CHECK(parse_plant_kind(to_string(k)) == k);
  }
  CHECK_FALSE(parse_integration_scheme("rk45").has_value());
  static_assert(Plant::unstable_linear().drift(2.0) == 2.0);
  static_assert(Plant::integrator().drift(2.0) == 0.0);
}
