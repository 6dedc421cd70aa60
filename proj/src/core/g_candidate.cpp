#include "etpc/core/g_candidate.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "etpc/core/errors.hpp"

namespace etpc {

namespace g {

GCandidate log_ratio() {
  return GCandidate{
      "LogRatio",
      [](double s) {
        return s > 0.0 ? std::log(s) : -std::numeric_limits<double>::infinity();
      },
      [](double s) { return 1.0 / s; },
      std::nullopt,
  };
}

GCandidate identity() {
  return GCandidate{
      "Identity",
      [](double s) { return s; },
      [](double) { return 1.0; },
      std::nullopt,
  };
}

GCandidate bounded_exp() {
  return GCandidate{
      "BoundedExp",
      [](double s) { return -std::expm1(-s); },
      [](double s) { return std::exp(-s); },
      1.0,
  };
}

GCandidate arctan() {
  return GCandidate{
      "Arctan",
      [](double s) { return 2.0 * std::numbers::inv_pi * std::atan(s); },
      [](double s) { return 2.0 * std::numbers::inv_pi / (1.0 + s * s); },
      1.0,
  };
}

}  // namespace g

std::vector<GCandidate> shipped_g_candidates() {
  return {g::log_ratio(), g::identity(), g::bounded_exp(), g::arctan()};
}

std::vector<std::string> shipped_g_names() {
  std::vector<std::string> names;
  for (const auto& candidate : shipped_g_candidates()) {
    names.push_back(candidate.name);
  }
  return names;
}

GCandidate find_g_candidate(std::string_view name) {
  for (auto& candidate : shipped_g_candidates()) {
    if (candidate.name == name) {
      return candidate;
    }
  }
  std::string known;
  for (const auto& n : shipped_g_names()) {
    known += known.empty() ? n : ", " + n;
  }
  throw Error(ErrorCode::UnknownG,
              "unknown G candidate '" + std::string(name) + "'; shipped candidates: " + known);
}

}  // namespace etpc
