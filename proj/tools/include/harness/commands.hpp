#pragma once

#include <iosfwd>

#include "harness/config.hpp"

namespace harness {

// Exit codes shared by all commands:
//   0 success, 1 configuration/parse error, 2 assumption violation,
//   3 computation failure (no interior equilibrium, non-convergence, bad t1).
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitAssumptions = 2;
inline constexpr int kExitComputation = 3;

// Each command validates the parameters, computes, writes its CSV outputs
// plus manifest.txt into cfg.out_dir, and prints a human summary to `out`.
// They throw expvote exceptions upward; main() maps them to exit codes.
// cmd_validate is the exception: it always prints the full report and
// returns kExitAssumptions itself on violation.
int cmd_validate(const RunConfig& cfg, std::ostream& out);
int cmd_solve(const RunConfig& cfg, std::ostream& out);
int cmd_sweep(const RunConfig& cfg, std::ostream& out);
int cmd_converge(const RunConfig& cfg, std::ostream& out);
int cmd_simulate(const RunConfig& cfg, std::ostream& out);
int cmd_reversible(const RunConfig& cfg, std::ostream& out);

}  // namespace harness
