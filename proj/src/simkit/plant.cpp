#include "etpc/simkit/plant.hpp"

namespace etpc {

const char* to_string(PlantKind kind) noexcept {
  switch (kind) {
    case PlantKind::Integrator:
      return "Integrator";
    case PlantKind::UnstableLinear:
      return "UnstableLinear";
  }
  return "unknown";
}

std::optional<PlantKind> parse_plant_kind(std::string_view token) noexcept {
  for (auto k : {PlantKind::Integrator, PlantKind::UnstableLinear}) {
    if (token == to_string(k)) {
      return k;
    }
  }
  return std::nullopt;
}

}  // namespace etpc
