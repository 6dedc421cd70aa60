#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "etpc/core/errors.hpp"
#include "etpc/core/g_candidate.hpp"
#include "etpc/core/g_conditions.hpp"
#include "etpc/core/level_map.hpp"
#include "etpc/core/params.hpp"
#include "etpc/core/settling.hpp"

namespace etpc {

enum class ControllerKind { ExplicitProportional, GeneralizedExplicit, GeneralizedPredefined, PlantCompensating };

[[nodiscard]] const char* to_string(ControllerKind kind) noexcept;
[[nodiscard]] std::optional<ControllerKind> parse_controller_kind(std::string_view token) noexcept;
[[nodiscard]] bool is_proportional(ControllerKind kind) noexcept;

class Controller;

[[nodiscard]] Controller make_explicit_proportional(const ControllerParams& params);
[[nodiscard]] Controller make_plant_compensating(const ControllerParams& params);

/// Throws GConditionError when G fails the sampled conditions, Error(DegenerateG) when N <= 0.
[[nodiscard]] Controller make_generalized_explicit(const GCandidate& g, const ControllerParams& params,
                                                   Composition composition = Composition::AbsPower);

/// Throws Error(PredefinedRequiresBoundedG) when G has no finite limit at infinity.
[[nodiscard]] Controller make_generalized_predefined(const GCandidate& g, const ControllerParams& params,
                                                     Composition composition = Composition::AbsPower);

/**
 * @brief Scalar state-feedback law u(x), immutable once built.
 *
 * Proportional kinds:  u = -k x               (ExplicitProportional)
 *                      u = -(k + 1) x         (PlantCompensating, for xdot = x + u)
 *                      with k = ln(x_c / x_s) / T_c.
 * Generalized kinds:   u = -N / (m T_c) * phi^(1-m) / phi'(x) / G'(S(x)), u(0) = 0,
 *                      N = G(S(x_c)) - G(S_ref) (explicit) or G(inf) - G(S_ref) (predefined).
 */
class Controller {
 public:
  [[nodiscard]] ControllerKind kind() const noexcept { return kind_; }
  [[nodiscard]] const ControllerParams& params() const noexcept { return params_; }
  [[nodiscard]] const std::optional<GCandidate>& g() const noexcept { return g_; }
  [[nodiscard]] Composition composition() const noexcept { return composition_; }

  /// ln(x_c / x_s) / T_c for the proportional kinds, 0 otherwise.
  [[nodiscard]] double gain() const noexcept { return gain_; }
  /// N for the generalized kinds, 0 otherwise.
  [[nodiscard]] double numerator() const noexcept { return numerator_; }

  [[nodiscard]] double operator()(double x) const;
  [[nodiscard]] double u(double x) const { return (*this)(x); }

  /// Closed-form time to the target set from x0 for the closed loop this law was designed for
  /// (accuracy band for the proportional kinds, reference state for the generalized kinds).
  [[nodiscard]] ReachReport analytic_reach(double x0) const;

  friend Controller make_explicit_proportional(const ControllerParams&);
  friend Controller make_plant_compensating(const ControllerParams&);
  friend Controller make_generalized_explicit(const GCandidate&, const ControllerParams&, Composition);
  friend Controller make_generalized_predefined(const GCandidate&, const ControllerParams&, Composition);

 private:
  Controller(ControllerKind kind, const ControllerParams& params, std::optional<GCandidate> g,
             Composition composition, double gain, double numerator)
      : kind_(kind), params_(params), g_(std::move(g)), composition_(composition), gain_(gain),
        numerator_(numerator) {}

  ControllerKind kind_;
  ControllerParams params_;
  std::optional<GCandidate> g_;
  Composition composition_;
  double gain_;
  double numerator_;
};


class GConditionError : public Error {
 public:
  explicit GConditionError(ConditionReport report);

  [[nodiscard]] const ConditionReport& report() const noexcept { return report_; }

 private:
  ConditionReport report_;
};

}  // namespace etpc
