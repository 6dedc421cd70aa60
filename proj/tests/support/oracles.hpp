#pragma once

// Test-only reference computations. Nothing here calls into the library's law or
// settling-time code paths; the oracles rebuild the quantities from the raw formulas.

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <functional>
#include <random>

namespace oracle {

/// Central finite difference of f at s with step h = rel * max(|s|, 1e-300).
inline double central_difference(const std::function<double(double)>& f, double s, double rel = 1e-5) {
  const double h = rel * std::abs(s);
  return (f(s + h) - f(s - h)) / (2.0 * h);
}

/// Exact solution of xdot = -k x.
inline double exponential_decay(double x0, double k, double t) { return x0 * std::exp(-k * t); }

/// Rate of the generalized family over V = x^2/2 written out from its raw form,
/// xdot = -N / T_c * [dG((x^2/2)^m)/dx]^{-1}, with the derivative expanded by hand.
struct HalfSquareField {
  std::function<double(double)> g_eval;
  std::function<double(double)> g_deriv;
  double m;
  double t_c;
  double x_c;

  [[nodiscard]] double numerator() const {
    return g_eval(std::pow(0.5 * x_c * x_c, m)) - g_eval(0.0);
  }
  [[nodiscard]] double dG_dx(double x) const {
    const double v = 0.5 * x * x;
    return g_deriv(std::pow(v, m)) * m * std::pow(v, m - 1.0) * x;
  }
  [[nodiscard]] double rate(double x) const { return -numerator() / t_c / dG_dx(x); }
};

/// T(x0) = integral over [0, |x0|] of dx / |xdot(x)|, by double-exponential quadrature.
inline double settling_time_by_quadrature(const HalfSquareField& field, double x0) {
  if (x0 == 0.0) {
    return 0.0;
  }
  // x = |x0| w^q with q = 1/(2m) cancels the |x|^(2m-1) behaviour of 1/|xdot| at the origin,
  // leaving a bounded integrand; the slice [0, 1e-12] is dropped (relative weight ~1e-12).
  const double a = std::abs(x0);
  const double q = 0.5 / field.m;
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(
      [&](double w) {
        const double x = a * std::pow(w, q);
        return a * q * std::pow(w, q - 1.0) / std::abs(field.rate(x));
      },
      1e-12, 1.0);
}

/// Raw comparison laws u = -N / T_c * [dG(|x|^m)/dx]^{-1} with the x-derivative taken by
/// central differences of x -> G(|x|^m). Valid away from x = 0.
inline double raw_abs_power_law(const std::function<double(double)>& g_eval, double numerator,
                                double m, double t_c, double x) {
  const auto composite = [&](double y) { return g_eval(std::pow(std::abs(y), m)); };
  const double dG_dx = central_difference(composite, x, 1e-6);
  return -numerator / t_c / dG_dx;
}

/// Deterministic generator shared by property tests.
inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eedULL);
  return engine;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline double log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

}  // namespace oracle
