#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace etpc {

/**
 * @brief A settling-time shaping function G of the Lyapunov level.
 *
 * `eval` is G(s) for s >= 0 (it may return -inf at s = 0 when G is singular there),
 * `deriv` is dG/ds for s > 0. `limit_at_infinity` carries G(inf) when it is finite;
 * predefined-time laws need it exactly, so it is never probed numerically.
 */
struct GCandidate {
  std::string name;
  std::function<double(double)> eval;
  std::function<double(double)> deriv;
  std::optional<double> limit_at_infinity;

  [[nodiscard]] bool bounded() const noexcept { return limit_at_infinity.has_value(); }
};

namespace g {

/// G(s) = ln(s). Singular at 0, unbounded.
[[nodiscard]] GCandidate log_ratio();
/// G(s) = s.
[[nodiscard]] GCandidate identity();
/// G(s) = 1 - exp(-s), G(inf) = 1.
[[nodiscard]] GCandidate bounded_exp();
/// G(s) = (2/pi) atan(s), G(inf) = 1.
[[nodiscard]] GCandidate arctan();

}  // namespace g

/// LogRatio, Identity, BoundedExp, Arctan, in that order.
[[nodiscard]] std::vector<GCandidate> shipped_g_candidates();

[[nodiscard]] std::vector<std::string> shipped_g_names();

/// Throws Error(UnknownG) listing the shipped names when `name` is not one of them.
[[nodiscard]] GCandidate find_g_candidate(std::string_view name);

}  // namespace etpc
