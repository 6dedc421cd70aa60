#pragma once

#include <optional>
#include <string_view>

#include "etpc/core/params.hpp"

namespace etpc {

/**
 * @brief How the state enters G.
 *
 * The shaping function is applied to a level S(x) = phi(x)^m where
 *   AbsPower:          phi(x) = |x|                (comparison laws, reference x = 0)
 *   HalfSquare:        phi(x) = x^2 / 2            (generalized family, reference x = 0)
 *   ScaledHalfSquare:  phi(x) = x^2 / (2 x_s^2)    (practical family, reference x = x_s)
 */
enum class Composition { AbsPower, HalfSquare, ScaledHalfSquare };

[[nodiscard]] const char* to_string(Composition composition) noexcept;
[[nodiscard]] std::optional<Composition> parse_composition(std::string_view token) noexcept;

class LevelMap {
 public:
  LevelMap(Composition composition, const ControllerParams& params) noexcept;

  [[nodiscard]] Composition composition() const noexcept { return composition_; }

  /// phi(x)
  [[nodiscard]] double base(double x) const noexcept;
  /// S(x) = phi(x)^m
  [[nodiscard]] double level(double x) const noexcept;

  /// State at which the settling time is measured from: 0, or x_s for the practical family.
  [[nodiscard]] double reference_state() const noexcept;
  [[nodiscard]] double reference_level() const noexcept { return level(reference_state()); }

  /// phi(x)^(1-m) / phi'(x) for x != 0. Odd in x.
  /// The closed-loop rate is -N / (m T_c) * inverse_slope(x) / G'(S(x)).
  [[nodiscard]] double inverse_slope(double x) const noexcept;

 private:
  Composition composition_;
  double m_;
  double x_s_;
};

}  // namespace etpc
