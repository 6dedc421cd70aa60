#include "etpc/core/level_map.hpp"

#include <cmath>

namespace etpc {

const char* to_string(Composition composition) noexcept {
  switch (composition) {
    case Composition::AbsPower:
      return "abs_power";
    case Composition::HalfSquare:
      return "half_square";
    case Composition::ScaledHalfSquare:
      return "scaled_half_square";
  }
  return "unknown";
}

std::optional<Composition> parse_composition(std::string_view token) noexcept {
  for (auto c : {Composition::AbsPower, Composition::HalfSquare, Composition::ScaledHalfSquare}) {
    if (token == to_string(c)) {
      return c;
    }
  }
  return std::nullopt;
}

LevelMap::LevelMap(Composition composition, const ControllerParams& params) noexcept
    : composition_(composition), m_(params.m()), x_s_(params.x_s()) {}

double LevelMap::base(double x) const noexcept {
  switch (composition_) {
    case Composition::AbsPower:
      return std::abs(x);
    case Composition::HalfSquare:
      return 0.5 * x * x;
    case Composition::ScaledHalfSquare:
      return 0.5 * (x / x_s_) * (x / x_s_);
  }
  return 0.0;
}

double LevelMap::level(double x) const noexcept {
  return std::pow(base(x), m_);
}

double LevelMap::reference_state() const noexcept {
  return composition_ == Composition::ScaledHalfSquare ? x_s_ : 0.0;
}

double LevelMap::inverse_slope(double x) const noexcept {
  switch (composition_) {
    case Composition::AbsPower:
      return std::copysign(std::pow(std::abs(x), 1.0 - m_), x);
    case Composition::HalfSquare:
      return std::pow(base(x), 1.0 - m_) / x;
    case Composition::ScaledHalfSquare:
      return std::pow(base(x), 1.0 - m_) * x_s_ * x_s_ / x;
  }
  return 0.0;
}

}  // namespace etpc
