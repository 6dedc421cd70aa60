#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "etpc/controllers/controller.hpp"
#include "etpc/simkit/plant.hpp"
#include "etpc/simkit/simulate.hpp"

namespace etpc {

struct ControllerSpec {
  ControllerKind kind = ControllerKind::ExplicitProportional;
  double x_c = 0.0;
  double x_s = 0.0;
  double t_c = 0.0;
  double m = kDefaultExponent;
  /// Shipped G name; required for the generalized kinds, rejected for the proportional ones.
  std::optional<std::string> g;
  Composition composition = Composition::AbsPower;

  friend bool operator==(const ControllerSpec&, const ControllerSpec&) = default;
};

/// Predefined-vs-explicit comparison built from the scenario's (x_c, x_s, T_c, m) and a bounded G.
struct ComparisonSpec {
  std::string g;

  friend bool operator==(const ComparisonSpec&, const ComparisonSpec&) = default;
};

struct Scenario {
  std::string name;
  PlantKind plant = PlantKind::Integrator;
  ControllerSpec controller;
  std::vector<double> x0_list;
  double dt = 1e-3;
  double horizon = 0.0;
  IntegrationScheme integrator = IntegrationScheme::Rk4;
  std::optional<ComparisonSpec> comparison;

  [[nodiscard]] ControllerParams params() const;
  [[nodiscard]] Controller build_controller() const;
  [[nodiscard]] SimulationOptions simulation_options() const { return {dt, horizon, integrator}; }

  /// Throws Error(AccuracyNotInsideDomain | InvalidParameter | ScenarioValidation | ...) naming
  /// the violated invariant.
  void validate() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/**
 * YAML scenario schema (keys outside this list are rejected):
 *
 *   name: paper_fig3
 *   plant: UnstableLinear                 # Integrator | UnstableLinear
 *   controller:
 *     kind: PlantCompensating             # ExplicitProportional | PlantCompensating |
 *                                         # GeneralizedExplicit | GeneralizedPredefined
 *     x_c: 100
 *     x_s: 0.1
 *     T_c: 1
 *     m: 0.5                              # optional, default 0.5
 *     g: BoundedExp                       # generalized kinds only
 *     composition: abs_power              # optional: abs_power | half_square | scaled_half_square
 *   x0: [100, -100, 50, -50, 10, -10]
 *   dt: 0.001                             # optional, default 1e-3
 *   horizon: 2                            # optional, default 2 T_c
 *   integrator: rk4                       # optional: rk4 | euler
 *   comparison:                           # optional
 *     g: BoundedExp
 *
 * Parse problems raise Error(ScenarioParse) with "<source>:<line>:<column>: <field>: ..." text.
 */
[[nodiscard]] Scenario parse_scenario(std::string_view yaml_text, const std::string& source = "<string>");
[[nodiscard]] Scenario load_scenario(const std::filesystem::path& path);

[[nodiscard]] std::string scenario_to_yaml(const Scenario& scenario);
void save_scenario(const Scenario& scenario, const std::filesystem::path& path);

}  // namespace etpc
