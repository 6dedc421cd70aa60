#include "etpc/core/errors.hpp"

namespace etpc {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParameter:
      return "invalid_parameter";
    case ErrorCode::AccuracyNotInsideDomain:
      return "accuracy_not_inside_domain";
    case ErrorCode::DegenerateG:
      return "degenerate_g";
    case ErrorCode::GConditionViolation:
      return "g_condition_violation";
    case ErrorCode::PredefinedRequiresBoundedG:
      return "predefined_requires_bounded_g";
    case ErrorCode::Divergence:
      return "divergence";
    case ErrorCode::InsufficientData:
      return "insufficient_data";
    case ErrorCode::UnknownG:
      return "unknown_g";
    case ErrorCode::ScenarioParse:
      return "scenario_parse";
    case ErrorCode::ScenarioValidation:
      return "scenario_validation";
    case ErrorCode::Io:
      return "io";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

DivergenceError::DivergenceError(std::size_t step, const std::string& message)
    : Error(ErrorCode::Divergence, message + " (step " + std::to_string(step) + ")"), step_(step) {}

}  // namespace etpc
