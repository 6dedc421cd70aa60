#include "etpc/harness/scenario.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "etpc/core/errors.hpp"

namespace etpc {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    out += out.empty() ? s : ", " + s;
  }
  return out;
}

class YamlReader {
 public:
  explicit YamlReader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const YAML::Node& node, const std::string& field, const std::string& msg) const {
    std::ostringstream os;
    os << source_;
    if (node.IsDefined()) {
      const auto mark = node.Mark();
      if (mark.line >= 0) {
        os << ':' << mark.line + 1 << ':' << mark.column + 1;
      }
    }
    os << ": " << field << ": " << msg;
    throw Error(ErrorCode::ScenarioParse, os.str());
  }

  void require_map(const YAML::Node& node, const std::string& field) const {
    if (!node.IsMap()) {
      fail(node, field, "expected a mapping");
    }
  }

  void reject_unknown_keys(const YAML::Node& map, std::initializer_list<const char*> allowed,
                           const std::string& context) const {
    std::vector<std::string> seen;
    for (const auto& kv : map) {
      const auto key = kv.first.as<std::string>();
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
        fail(kv.first, context.empty() ? key : context + "." + key, "duplicate key");
      }
      seen.push_back(key);
      const bool known = std::any_of(allowed.begin(), allowed.end(),
                                     [&key](const char* a) { return key == a; });
      if (!known) {
        std::vector<std::string> names(allowed.begin(), allowed.end());
        fail(kv.first, context.empty() ? key : context + "." + key,
             "unknown key; allowed keys: " + join(names));
      }
    }
  }

  template <class T>
  T scalar(const YAML::Node& node, const std::string& field, const char* type_name) const {
    if (!node.IsScalar()) {
      fail(node, field, std::string("expected a ") + type_name);
    }
    try {
      return node.as<T>();
    } catch (const YAML::Exception&) {
      fail(node, field, std::string("expected a ") + type_name + ", got '" + node.Scalar() + "'");
    }
  }

  YAML::Node required(const YAML::Node& map, const char* key, const std::string& field) const {
    const YAML::Node node = map[key];
    if (!node.IsDefined() || node.IsNull()) {
      fail(map, field, "missing required key");
    }
    return node;
  }

 private:
  std::string source_;
};

template <class Enum, class Parse>
Enum parse_token(const YamlReader& reader, const YAML::Node& node, const std::string& field,
                 Parse parse, std::initializer_list<Enum> all) {
  const auto token = reader.scalar<std::string>(node, field, "string");
  if (auto value = parse(token)) {
    return *value;
  }
  std::vector<std::string> names;
  for (auto e : all) {
    names.emplace_back(to_string(e));
  }
  reader.fail(node, field, "unknown value '" + token + "'; expected one of: " + join(names));
}

void require_shipped_g(const std::string& name, const std::string& field) {
  const auto names = shipped_g_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw Error(ErrorCode::ScenarioValidation,
                field + ": unknown G '" + name + "'; shipped candidates: " + join(names));
  }
}

}  // namespace

ControllerParams Scenario::params() const {
  return ControllerParams::create(controller.x_c, controller.x_s, controller.t_c, controller.m);
}

Controller Scenario::build_controller() const {
  const auto p = params();
  switch (controller.kind) {
    case ControllerKind::ExplicitProportional:
      return make_explicit_proportional(p);
    case ControllerKind::PlantCompensating:
      return make_plant_compensating(p);
    case ControllerKind::GeneralizedExplicit:
      return make_generalized_explicit(find_g_candidate(*controller.g), p, controller.composition);
    case ControllerKind::GeneralizedPredefined:
      return make_generalized_predefined(find_g_candidate(*controller.g), p, controller.composition);
  }
  return make_explicit_proportional(p);
}

void Scenario::validate() const {
  if (name.empty() || !std::all_of(name.begin(), name.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_' || c == '-' || c == '.';
      })) {
    throw Error(ErrorCode::ScenarioValidation,
                "name: '" + name + "' must be non-empty and use only [A-Za-z0-9_.-]");
  }
  static_cast<void>(params());

  if (is_proportional(controller.kind)) {
    if (controller.g) {
      throw Error(ErrorCode::ScenarioValidation,
                  std::string("controller.g: not used by ") + to_string(controller.kind));
    }
  } else {
    if (!controller.g) {
      throw Error(ErrorCode::ScenarioValidation,
                  std::string("controller.g: required for ") + to_string(controller.kind));
    }
    require_shipped_g(*controller.g, "controller.g");
  }

  if (x0_list.empty()) {
    throw Error(ErrorCode::ScenarioValidation, "x0: at least one initial state is required");
  }
  if (!std::all_of(x0_list.begin(), x0_list.end(), [](double v) { return std::isfinite(v); })) {
    throw Error(ErrorCode::ScenarioValidation, "x0: initial states must be finite");
  }
  if (!(dt > 0.0) || !std::isfinite(dt) || !(horizon > 0.0) || !std::isfinite(horizon)) {
    throw Error(ErrorCode::ScenarioValidation, "dt and horizon must be positive and finite");
  }
  if (dt > horizon) {
    throw Error(ErrorCode::ScenarioValidation, "dt must not exceed the horizon");
  }

  if (comparison) {
    require_shipped_g(comparison->g, "comparison.g");
    if (!find_g_candidate(comparison->g).bounded()) {
      throw Error(ErrorCode::PredefinedRequiresBoundedG,
                  "comparison.g: '" + comparison->g + "' has no finite limit at infinity");
    }
  }
  // Generalized laws check G admissibility on construction.
  static_cast<void>(build_controller());
}

Scenario parse_scenario(std::string_view yaml_text, const std::string& source) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml_text));
  } catch (const YAML::ParserException& e) {
    std::ostringstream os;
    os << source << ':' << e.mark.line + 1 << ':' << e.mark.column + 1 << ": " << e.msg;
    throw Error(ErrorCode::ScenarioParse, os.str());
  }

  const YamlReader reader(source);
  reader.require_map(root, "<root>");
  reader.reject_unknown_keys(
      root, {"name", "plant", "controller", "x0", "dt", "horizon", "integrator", "comparison"}, "");

  Scenario s;
  s.name = reader.scalar<std::string>(reader.required(root, "name", "name"), "name", "string");
  s.plant = parse_token(reader, reader.required(root, "plant", "plant"), "plant", parse_plant_kind,
                        {PlantKind::Integrator, PlantKind::UnstableLinear});

  const auto ctrl = reader.required(root, "controller", "controller");
  reader.require_map(ctrl, "controller");
  reader.reject_unknown_keys(ctrl, {"kind", "x_c", "x_s", "T_c", "m", "g", "composition"}, "controller");
  s.controller.kind =
      parse_token(reader, reader.required(ctrl, "kind", "controller.kind"), "controller.kind",
                  parse_controller_kind,
                  {ControllerKind::ExplicitProportional, ControllerKind::PlantCompensating,
                   ControllerKind::GeneralizedExplicit, ControllerKind::GeneralizedPredefined});
  s.controller.x_c = reader.scalar<double>(reader.required(ctrl, "x_c", "controller.x_c"), "controller.x_c", "number");
  s.controller.x_s = reader.scalar<double>(reader.required(ctrl, "x_s", "controller.x_s"), "controller.x_s", "number");
  s.controller.t_c = reader.scalar<double>(reader.required(ctrl, "T_c", "controller.T_c"), "controller.T_c", "number");
  if (ctrl["m"]) {
    s.controller.m = reader.scalar<double>(ctrl["m"], "controller.m", "number");
  }
  if (ctrl["g"]) {
    s.controller.g = reader.scalar<std::string>(ctrl["g"], "controller.g", "string");
  }
  if (ctrl["composition"]) {
    s.controller.composition =
        parse_token(reader, ctrl["composition"], "controller.composition", parse_composition,
                    {Composition::AbsPower, Composition::HalfSquare, Composition::ScaledHalfSquare});
  }

  const auto x0 = reader.required(root, "x0", "x0");
  if (x0.IsSequence()) {
    for (std::size_t i = 0; i < x0.size(); ++i) {
      s.x0_list.push_back(reader.scalar<double>(x0[i], "x0[" + std::to_string(i) + "]", "number"));
    }
  } else {
    s.x0_list.push_back(reader.scalar<double>(x0, "x0", "number"));
  }

  if (root["dt"]) {
    s.dt = reader.scalar<double>(root["dt"], "dt", "number");
  }
  s.horizon = root["horizon"] ? reader.scalar<double>(root["horizon"], "horizon", "number")
                              : 2.0 * s.controller.t_c;
  if (root["integrator"]) {
    s.integrator = parse_token(reader, root["integrator"], "integrator", parse_integration_scheme,
                               {IntegrationScheme::Rk4, IntegrationScheme::Euler});
  }
  if (const auto cmp = root["comparison"]) {
    reader.require_map(cmp, "comparison");
    reader.reject_unknown_keys(cmp, {"g"}, "comparison");
    s.comparison = ComparisonSpec{
        reader.scalar<std::string>(reader.required(cmp, "g", "comparison.g"), "comparison.g", "string")};
  }

  s.validate();
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::Io, "cannot open scenario file " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str(), path.string());
}

std::string scenario_to_yaml(const Scenario& s) {
  YAML::Emitter out;
  out.SetDoublePrecision(17);
  out << YAML::BeginMap;
  out << YAML::Key << "name" << YAML::Value << s.name;
  out << YAML::Key << "plant" << YAML::Value << to_string(s.plant);
  out << YAML::Key << "controller" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "kind" << YAML::Value << to_string(s.controller.kind);
  out << YAML::Key << "x_c" << YAML::Value << s.controller.x_c;
  out << YAML::Key << "x_s" << YAML::Value << s.controller.x_s;
  out << YAML::Key << "T_c" << YAML::Value << s.controller.t_c;
  out << YAML::Key << "m" << YAML::Value << s.controller.m;
  if (s.controller.g) {
    out << YAML::Key << "g" << YAML::Value << *s.controller.g;
  }
  out << YAML::Key << "composition" << YAML::Value << to_string(s.controller.composition);
  out << YAML::EndMap;
  out << YAML::Key << "x0" << YAML::Value << YAML::Flow << s.x0_list;
  out << YAML::Key << "dt" << YAML::Value << s.dt;
  out << YAML::Key << "horizon" << YAML::Value << s.horizon;
  out << YAML::Key << "integrator" << YAML::Value << to_string(s.integrator);
  if (s.comparison) {
    out << YAML::Key << "comparison" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "g" << YAML::Value << s.comparison->g;
    out << YAML::EndMap;
  }
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::Io, "cannot write scenario file " + path.string());
  }
  out << scenario_to_yaml(scenario);
  if (!out) {
    throw Error(ErrorCode::Io, "failed writing scenario file " + path.string());
  }
}

}  // namespace etpc
