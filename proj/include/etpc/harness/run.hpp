#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "etpc/harness/report.hpp"
#include "etpc/simkit/sweep.hpp"

namespace etpc {

struct RunOptions {
  /// Where trajectory and report files go; nothing is written when unset.
  std::optional<std::filesystem::path> out_dir;
  DifferenceScheme residual_scheme = DifferenceScheme::Forward;
  SweepExecution execution = SweepExecution::Parallel;
};

struct RunResult {
  VerificationReport report;
  std::vector<std::filesystem::path> trajectory_files;
  std::optional<std::filesystem::path> report_file;
};

/**
 * Sweep, analytic times, Lyapunov residuals and (when configured) the input-advantage
 * comparison. Per-row simulation failures become row status; only I/O problems throw
 * (Error(Io)).
 */
[[nodiscard]] RunResult run_scenario(const Scenario& scenario, const RunOptions& options = {});

}  // namespace etpc
