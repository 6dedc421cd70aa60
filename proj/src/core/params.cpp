#include "etpc/core/params.hpp"

#include <cmath>
#include <sstream>

#include "etpc/core/errors.hpp"

namespace etpc {

namespace {

void require_positive(const char* name, double value) {
  if (!std::isfinite(value) || value <= 0.0) {
    std::ostringstream os;
    os << name << " must be a positive finite number, got " << value;
    throw Error(ErrorCode::InvalidParameter, os.str());
  }
}

}  // namespace

ControllerParams ControllerParams::create(double x_c, double x_s, double t_c, double m) {
  require_positive("x_c", x_c);
  require_positive("x_s", x_s);
  require_positive("T_c", t_c);
  if (!(m > 0.0 && m < 1.0)) {
    std::ostringstream os;
    os << "m must lie in the open interval (0, 1), got " << m;
    throw Error(ErrorCode::InvalidParameter, os.str());
  }
  if (x_s >= x_c) {
    std::ostringstream os;
    os << "x_s (" << x_s << ") must be strictly smaller than x_c (" << x_c << ")";
    throw Error(ErrorCode::AccuracyNotInsideDomain, os.str());
  }
  return ControllerParams(x_c, x_s, t_c, m);
}

double ControllerParams::proportional_gain() const noexcept {
  return std::log(x_c_ / x_s_) / t_c_;
}

bool ControllerParams::in_condition_domain(double x) const noexcept {
  return std::abs(x) <= x_c_;
}

bool ControllerParams::in_accuracy_band(double x) const noexcept {
  return std::abs(x) <= x_s_;
}

ControllerParams ControllerParams::with_time_bound(double t_c) const {
  return create(x_c_, x_s_, t_c, m_);
}

ControllerParams ControllerParams::with_exponent(double m) const {
  return create(x_c_, x_s_, t_c_, m);
}

}  // namespace etpc
