#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "etpc/core/g_candidate.hpp"
#include "etpc/core/level_map.hpp"
#include "etpc/core/params.hpp"

namespace etpc {

struct ConditionOutcome {
  bool passed = true;
  /// State at which the violation was found.
  std::optional<double> witness;
  std::string detail;
};

/**
 * Sampled admissibility of G over the condition domain.
 *
 * continuity:          G(S(x)) finite on the samples and at the reference state, and no
 *                      successive difference exceeds the mean-value bound from G'.
 * inverse_derivative:  [dG/dS]^-1 positive, finite and below `kInverseDerivativeCap`.
 *
 * Only gross violations are detectable this way; right-continuity is not certified.
 */
struct ConditionReport {
  std::string g_name;
  Composition composition = Composition::AbsPower;
  std::size_t samples = 0;
  ConditionOutcome continuity;
  ConditionOutcome inverse_derivative;

  [[nodiscard]] bool passed() const noexcept {
    return continuity.passed && inverse_derivative.passed;
  }
  /// One line per condition, e.g. for CLI output or exception messages.
  [[nodiscard]] std::string summary() const;
};

inline constexpr double kInverseDerivativeCap = 1e12;
inline constexpr std::size_t kDefaultConditionSamples = 2001;

/**
 * Samples `n_samples` states uniformly over [-x_c, x_c] (x = 0 excluded). For the practical
 * ScaledHalfSquare family only x_s <= |x| <= x_c is sampled, since the trajectory leaves that
 * region once it reaches the accuracy band. Failures are reported, never thrown, except that
 * n_samples < 2 is an Error(InvalidParameter).
 */
[[nodiscard]] ConditionReport verify_g_conditions(const GCandidate& g,
                                                  const ControllerParams& params,
                                                  std::size_t n_samples,
                                                  Composition composition = Composition::AbsPower);

}  // namespace etpc
