#include "etpc/controllers/controller.hpp"

#include <cmath>
#include <sstream>

namespace etpc {

const char* to_string(ControllerKind kind) noexcept {
  switch (kind) {
    case ControllerKind::ExplicitProportional:
      return "ExplicitProportional";
    case ControllerKind::GeneralizedExplicit:
      return "GeneralizedExplicit";
    case ControllerKind::GeneralizedPredefined:
      return "GeneralizedPredefined";
    case ControllerKind::PlantCompensating:
      return "PlantCompensating";
  }
  return "unknown";
}

std::optional<ControllerKind> parse_controller_kind(std::string_view token) noexcept {
  for (auto k : {ControllerKind::ExplicitProportional, ControllerKind::GeneralizedExplicit,
                 ControllerKind::GeneralizedPredefined, ControllerKind::PlantCompensating}) {
    if (token == to_string(k)) {
      return k;
    }
  }
  return std::nullopt;
}

bool is_proportional(ControllerKind kind) noexcept {
  return kind == ControllerKind::ExplicitProportional || kind == ControllerKind::PlantCompensating;
}

GConditionError::GConditionError(ConditionReport report)
    : Error(ErrorCode::GConditionViolation, report.summary()), report_(std::move(report)) {}

namespace {

void require_admissible(const GCandidate& g, const ControllerParams& params, Composition composition) {
  auto report = verify_g_conditions(g, params, kDefaultConditionSamples, composition);
  if (!report.passed()) {
    throw GConditionError(std::move(report));
  }
}

double checked_numerator(const GCandidate& g, double upper, double reference_level) {
  const double n = upper - g.eval(reference_level);
  if (!std::isfinite(n) || !(n > 0.0)) {
    std::ostringstream os;
    os << "G '" << g.name << "' gives non-positive or non-finite gain numerator " << n;
    throw Error(ErrorCode::DegenerateG, os.str());
  }
  return n;
}

}  // namespace

Controller make_explicit_proportional(const ControllerParams& params) {
  return Controller(ControllerKind::ExplicitProportional, params, std::nullopt, Composition::AbsPower,
                    params.proportional_gain(), 0.0);
}

Controller make_plant_compensating(const ControllerParams& params) {
  return Controller(ControllerKind::PlantCompensating, params, std::nullopt, Composition::AbsPower,
                    params.proportional_gain(), 0.0);
}

Controller make_generalized_explicit(const GCandidate& g, const ControllerParams& params,
                                     Composition composition) {
  require_admissible(g, params, composition);
  const LevelMap map(composition, params);
  const double n = checked_numerator(g, g.eval(map.level(params.x_c())), map.reference_level());
  return Controller(ControllerKind::GeneralizedExplicit, params, g, composition, 0.0, n);
}

Controller make_generalized_predefined(const GCandidate& g, const ControllerParams& params,
                                       Composition composition) {
  if (!g.bounded()) {
    throw Error(ErrorCode::PredefinedRequiresBoundedG,
                "G '" + g.name + "' has no finite limit at infinity");
  }
  require_admissible(g, params, composition);
  const LevelMap map(composition, params);
  const double n = checked_numerator(g, *g.limit_at_infinity, map.reference_level());
  return Controller(ControllerKind::GeneralizedPredefined, params, g, composition, 0.0, n);
}

double Controller::operator()(double x) const {
  switch (kind_) {
    case ControllerKind::ExplicitProportional:
      return -gain_ * x;
    case ControllerKind::PlantCompensating:
      return -(gain_ + 1.0) * x;
    case ControllerKind::GeneralizedExplicit:
    case ControllerKind::GeneralizedPredefined:
      break;
  }
  if (x == 0.0) {
    return 0.0;
  }
  const LevelMap map(composition_, params_);
  return -numerator_ / (params_.m() * params_.t_c()) * map.inverse_slope(x) / g_->deriv(map.level(x));
}

ReachReport Controller::analytic_reach(double x0) const {
  switch (kind_) {
    case ControllerKind::ExplicitProportional:
    case ControllerKind::PlantCompensating:
      return practical_reaching_time(params_, x0);
    case ControllerKind::GeneralizedExplicit:
      return settling_time_lemma3(*g_, params_, x0, composition_);
    case ControllerKind::GeneralizedPredefined:
      return settling_time_predefined(*g_, params_, x0, composition_);
  }
  return practical_reaching_time(params_, x0);
}

}  // namespace etpc
