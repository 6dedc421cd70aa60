#pragma once

#include <optional>
#include <string_view>

namespace etpc {

enum class PlantKind { Integrator, UnstableLinear };

[[nodiscard]] const char* to_string(PlantKind kind) noexcept;
[[nodiscard]] std::optional<PlantKind> parse_plant_kind(std::string_view token) noexcept;

/// Scalar open-loop vector field: xdot = drift(x) + u.
class Plant {
 public:
  explicit constexpr Plant(PlantKind kind) noexcept : kind_(kind) {}

  [[nodiscard]] static constexpr Plant integrator() noexcept { return Plant(PlantKind::Integrator); }
  [[nodiscard]] static constexpr Plant unstable_linear() noexcept {
    return Plant(PlantKind::UnstableLinear);
  }

  [[nodiscard]] constexpr PlantKind kind() const noexcept { return kind_; }

  [[nodiscard]] constexpr double drift(double x) const noexcept {
    return kind_ == PlantKind::UnstableLinear ? x : 0.0;
  }

  friend constexpr bool operator==(Plant, Plant) = default;

 private:
  PlantKind kind_;
};

}  // namespace etpc
