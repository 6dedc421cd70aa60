#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace etpc {

/// Error categories raised across the toolkit. Stable string tokens via to_string().
enum class ErrorCode {
  InvalidParameter,
  AccuracyNotInsideDomain,
  DegenerateG,
  GConditionViolation,
  PredefinedRequiresBoundedG,
  Divergence,
  InsufficientData,
  UnknownG,
  ScenarioParse,
  ScenarioValidation,
  Io
};

[[nodiscard]] const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Non-finite state produced by the integrator at `step`.
class DivergenceError : public Error {
 public:
  DivergenceError(std::size_t step, const std::string& message);

  [[nodiscard]] std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace etpc
