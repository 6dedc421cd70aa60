#pragma once

#include <iosfwd>

namespace etpc {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitVerification = 2,
  kExitUsage = 64,
};

/// Environment variable naming the default output directory of `run`.
inline constexpr const char* kOutDirEnv = "ETPC_OUT_DIR";
inline constexpr const char* kDefaultOutDir = "etpc_out";

/**
 * Subcommands:
 *   run <scenario> [--dt S] [--horizon S] [--out-dir DIR] [--integrator rk4|euler] [--central-diff]
 *   gain <x_c> <x_s> <T_c> [--points N]
 *   compare <scenario>
 *   check-g <name> <x_c> <m> [--x-s X] [--composition C] [--samples N]
 */
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace etpc
