#include "etpc/core/settling.hpp"

#include <cmath>
#include <sstream>

#include "etpc/core/errors.hpp"

namespace etpc {

namespace {

ReachReport make_report(const ControllerParams& params, double x0, double time) {
  return ReachReport{x0, time, params.in_condition_domain(x0), params.t_c()};
}

bool at_or_inside_reference(const LevelMap& map, double x0) {
  return std::abs(x0) <= map.reference_state();
}

double normalized_time(const GCandidate& g, const ControllerParams& params, const LevelMap& map,
                       double x0, double upper_value) {
  const double g_ref = g.eval(map.reference_level());
  const double span = upper_value - g_ref;
  if (!std::isfinite(span) || !(span > 0.0)) {
    std::ostringstream os;
    os << "G '" << g.name << "' gives a non-positive or non-finite span " << span
       << " over the condition domain (" << to_string(map.composition()) << ")";
    throw Error(ErrorCode::DegenerateG, os.str());
  }
  // Ratio first: at x0 = x_c it is exactly 1, and below it never rounds above 1.
  return params.t_c() * ((g.eval(map.level(x0)) - g_ref) / span);
}

}  // namespace

bool ReachReport::bound_holds() const noexcept {
  return !within_condition || analytic_time <= bound * (1.0 + 1e-12);
}

ReachReport settling_time_lemma3(const GCandidate& g, const ControllerParams& params, double x0,
                                 Composition composition) {
  const LevelMap map(composition, params);
  if (at_or_inside_reference(map, x0)) {
    return make_report(params, x0, 0.0);
  }
  const double time = normalized_time(g, params, map, x0, g.eval(map.level(params.x_c())));
  return make_report(params, x0, time);
}

ReachReport settling_time_predefined(const GCandidate& g, const ControllerParams& params,
                                     double x0, Composition composition) {
  if (!g.bounded()) {
    throw Error(ErrorCode::PredefinedRequiresBoundedG,
                "G '" + g.name + "' has no finite limit at infinity");
  }
  const LevelMap map(composition, params);
  if (at_or_inside_reference(map, x0)) {
    return make_report(params, x0, 0.0);
  }
  return make_report(params, x0, normalized_time(g, params, map, x0, *g.limit_at_infinity));
}

ReachReport practical_reaching_time(const ControllerParams& params, double x0) {
  const double magnitude = std::abs(x0);
  if (magnitude <= params.x_s()) {
    return make_report(params, x0, 0.0);
  }
  // Ratio first, so |x0| = x_c gives exactly T_c.
  const double time =
      params.t_c() * (std::log(magnitude / params.x_s()) / std::log(params.x_c() / params.x_s()));
  return make_report(params, x0, time);
}

double input_advantage(const GCandidate& g, const ControllerParams& params, double x0) {
  if (!g.bounded()) {
    throw Error(ErrorCode::PredefinedRequiresBoundedG,
                "G '" + g.name + "' has no finite limit at infinity");
  }
  if (x0 == 0.0) {
    return 0.0;
  }
  const double m = params.m();
  const double magnitude = std::abs(x0);
  const double gap = *g.limit_at_infinity - g.eval(std::pow(params.x_c(), m));
  return gap / (m * params.t_c()) * std::pow(magnitude, 1.0 - m) / g.deriv(std::pow(magnitude, m));
}

}  // namespace etpc
