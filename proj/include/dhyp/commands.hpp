#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "dhyp/report.hpp"

namespace dhyp {

// Exit code contract: 0 all checks pass, 1 verification failure,
// 2 usage/config error, 3 input parse error.
enum ExitCode : int {
  kExitPass = 0,
  kExitVerificationFailure = 1,
  kExitUsageError = 2,
  kExitParseError = 3,
};

struct RunConfig {
  std::string command;
  int n = 3;
  int r = 3;
  std::optional<std::uint64_t> prime;  // override; must satisfy preconditions
  std::uint64_t seed = 0;
  int trials = 5;
  std::optional<std::string> input_path;
  std::string format = "text";  // "json" | "text"
  // qbinom positional evaluation (d, a, b), optional.
  std::optional<std::array<int, 3>> qbinom_args;
};

// Thrown for violations of the RunConfig invariants (exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Thrown for unreadable or malformed input files (exit code 3).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Report cmd_rank(const RunConfig& cfg);
Report cmd_grading(const RunConfig& cfg);
Report cmd_qbinom(const RunConfig& cfg);
Report cmd_charpoly(const RunConfig& cfg);
Report cmd_fiber(const RunConfig& cfg);
Report cmd_all(const RunConfig& cfg);

// Dispatch on cfg.command, render to out in cfg.format, return the exit code.
int run_command(const RunConfig& cfg, std::string& out);

}  // namespace dhyp
