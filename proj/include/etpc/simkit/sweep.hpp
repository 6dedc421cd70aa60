#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "etpc/simkit/analysis.hpp"

namespace etpc {

struct SweepEntry {
  double x0 = 0.0;
  ReachReport reach;
  std::optional<Trajectory> trajectory;
  std::optional<SettlingResult> settling;
  /// Set when the run for this x0 failed; the other entries are unaffected.
  std::optional<std::string> error;
  std::optional<std::size_t> diverged_at_step;

  [[nodiscard]] bool ok() const noexcept { return !error.has_value(); }
};

enum class SweepExecution { Sequential, Parallel };

/// One entry per x0, in input order, regardless of execution mode.
[[nodiscard]] std::vector<SweepEntry> sweep_initial_conditions(
    const Plant& plant, const Controller& controller, std::span<const double> x0_list,
    const SimulationOptions& options, SweepExecution execution = SweepExecution::Parallel);

}  // namespace etpc
