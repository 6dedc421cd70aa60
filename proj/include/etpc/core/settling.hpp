#pragma once

#include "etpc/core/g_candidate.hpp"
#include "etpc/core/level_map.hpp"
#include "etpc/core/params.hpp"

namespace etpc {

/// Closed-form settling (or reaching) time for one initial state.
struct ReachReport {
  double x0 = 0.0;
  double analytic_time = 0.0;
  /// |x0| <= x_c. Outside the condition domain the formula still evaluates but carries no bound.
  bool within_condition = false;
  double bound = 0.0;

  /// within_condition implies analytic_time <= bound (with 1e-12 relative slack).
  [[nodiscard]] bool bound_holds() const noexcept;
};

/**
 * @brief Settling time of the generalized explicit-time family.
 *
 * T(x0) = T_c [G(S(x0)) - G(S_ref)] / [G(S(x_c)) - G(S_ref)], with S the level map of
 * `composition` (default x^2/2, the generalized-family convention). T = 0 when x0 is at or
 * inside the reference, even when G is singular there.
 *
 * Throws Error(DegenerateG) when the denominator is not a positive finite number.
 */
[[nodiscard]] ReachReport settling_time_lemma3(const GCandidate& g, const ControllerParams& params,
                                               double x0,
                                               Composition composition = Composition::HalfSquare);

/// Same shape with G(inf) in place of G(S(x_c)); requires a bounded G.
[[nodiscard]] ReachReport settling_time_predefined(const GCandidate& g,
                                                   const ControllerParams& params, double x0,
                                                   Composition composition = Composition::AbsPower);

/// T_c ln(|x0| / x_s) / ln(x_c / x_s) outside the band, 0 inside it.
[[nodiscard]] ReachReport practical_reaching_time(const ControllerParams& params, double x0);

/**
 * Initial-input gap |u_predefined(x0)| - |u_explicit(x0)| between the two generalized laws
 * over |x|^m, in closed form:
 *   [G(inf) - G(x_c^m)] / (m T_c) * |x0|^(1-m) / G'(|x0|^m).
 * Returns 0 at x0 = 0. Throws Error(PredefinedRequiresBoundedG) when G has no finite limit.
 */
[[nodiscard]] double input_advantage(const GCandidate& g, const ControllerParams& params,
                                     double x0);

}  // namespace etpc
