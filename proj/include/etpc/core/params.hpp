#pragma once

namespace etpc {

inline constexpr double kDefaultExponent = 0.5;

/**
 * @brief Condition-domain radius, accuracy radius, time bound and shaping exponent.
 *
 * Instances are always valid: 0 < x_s < x_c, T_c > 0 and 0 < m < 1.
 * The initial-condition domain is [-x_c, x_c]; the accuracy band is [-x_s, x_s].
 */
class ControllerParams {
 public:
  /// Throws Error(AccuracyNotInsideDomain) when x_s >= x_c, Error(InvalidParameter) otherwise.
  [[nodiscard]] static ControllerParams create(double x_c, double x_s, double t_c,
                                               double m = kDefaultExponent);

  [[nodiscard]] double x_c() const noexcept { return x_c_; }
  [[nodiscard]] double x_s() const noexcept { return x_s_; }
  [[nodiscard]] double t_c() const noexcept { return t_c_; }
  [[nodiscard]] double m() const noexcept { return m_; }

  /// ln(x_c / x_s) / T_c, the proportional gain in 1/s.
  [[nodiscard]] double proportional_gain() const noexcept;

  [[nodiscard]] bool in_condition_domain(double x) const noexcept;
  [[nodiscard]] bool in_accuracy_band(double x) const noexcept;

  [[nodiscard]] ControllerParams with_time_bound(double t_c) const;
  [[nodiscard]] ControllerParams with_exponent(double m) const;

  friend bool operator==(const ControllerParams&, const ControllerParams&) = default;

 private:
  ControllerParams(double x_c, double x_s, double t_c, double m)
      : x_c_(x_c), x_s_(x_s), t_c_(t_c), m_(m) {}

  double x_c_;
  double x_s_;
  double t_c_;
  double m_;
};

}  // namespace etpc
