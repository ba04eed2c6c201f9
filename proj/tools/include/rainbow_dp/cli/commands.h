//
// Copyright 2026 The Rainbow DP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef RAINBOW_DP_CLI_COMMANDS_H_
#define RAINBOW_DP_CLI_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "rainbow_dp/core/privacy_budget.h"

namespace rainbow_dp {

// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitViolation = 2,
  kExitUnconstrained = 3,
  kExitIncomplete = 4,
  kExitFalsified = 5,
};

struct CommandIo {
  std::ostream& out;
  std::ostream& err;
};

// Budget flags as given on the command line; at most one of epsilon and
// exp_epsilon may be set.
struct BudgetFlags {
  std::optional<double> epsilon;
  std::optional<double> exp_epsilon;
  double delta = 0.0;
};

// Resolves flags to a budget, using e^eps = `default_exp_epsilon` when
// neither epsilon flag was given (nullopt makes one of them required).
absl::StatusOr<PrivacyBudget> ResolveBudget(
    const BudgetFlags& flags, std::optional<double> default_exp_epsilon);

// An empty out_path writes to io.out.
int CmdBuild(const std::string& graph_path, const BudgetFlags& flags,
             const std::string& out_path, CommandIo io);

// Mechanism CSVs carry 12 significant digits, so the default tolerance
// absorbs the rounding of every entry.
inline constexpr double kCsvVerifyTolerance = 1e-9;

int CmdVerify(const std::string& graph_path, const std::string& mechanism_path,
              const BudgetFlags& flags, CommandIo io,
              double tolerance = kCsvVerifyTolerance);

struct TrajectoryOptions {
  std::string boundary;  // comma-separated, preference order
  std::string colors;    // optional comma-separated names for the ranks
  BudgetFlags budget;
  int steps = 60;
  int substeps = 10;
  std::string out_path;
};
int CmdTrajectory(const TrajectoryOptions& options, CommandIo io);

// tau markers are drawn when `budget` resolves (either epsilon flag given).
int CmdPlot(const std::string& trajectory_path, const std::string& out_path,
            const BudgetFlags& budget, CommandIo io);

struct DemoOptions {
  BudgetFlags budget;  // default e^eps = 2, delta = 0
  bool homogenized = false;
};
int CmdDemoNoOptimal(const DemoOptions& options, CommandIo io);

struct FuzzOptions {
  int q = 5;
  int64_t trials = 100;
  int samples = 200;  // close samples per trial
  uint64_t seed = 0;
  BudgetFlags budget;  // default e^eps = 2
  // Test-only: run the harness against the operator with delta dropped.
  bool mutant_drop_delta = false;
};
int CmdFuzz(const FuzzOptions& options, CommandIo io);

}  // namespace rainbow_dp

#endif  // RAINBOW_DP_CLI_COMMANDS_H_
