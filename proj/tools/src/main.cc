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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rainbow_dp/cli/commands.h"

namespace {

void AddBudgetFlags(CLI::App* cmd, rainbow_dp::BudgetFlags& flags) {
  CLI::Option* eps = cmd->add_option("--epsilon", flags.epsilon,
                                     "privacy parameter epsilon");
  CLI::Option* exp_eps = cmd->add_option("--e-epsilon", flags.exp_epsilon,
                                         "sets epsilon = log(X)");
  eps->excludes(exp_eps);
  exp_eps->excludes(eps);
  cmd->add_option("--delta", flags.delta, "privacy parameter delta");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal rainbow differential privacy mechanisms"};
  app.require_subcommand(1);
  rainbow_dp::CommandIo io{std::cout, std::cerr};
  int code = rainbow_dp::kExitOk;

  std::string graph_path, mechanism_path, out_path, trajectory_path;
  rainbow_dp::BudgetFlags budget;

  CLI::App* build = app.add_subcommand(
      "build", "construct the optimal mechanism for a graph file");
  build->add_option("graph", graph_path, "graph file")->required();
  build->add_option("--out", out_path, "mechanism CSV (default: stdout)");
  AddBudgetFlags(build, budget);
  build->callback([&] {
    code = rainbow_dp::CmdBuild(graph_path, budget, out_path, io);
  });

  CLI::App* verify = app.add_subcommand(
      "verify", "check a mechanism CSV edge by edge");
  verify->add_option("graph", graph_path, "graph file")->required();
  verify->add_option("mechanism", mechanism_path, "mechanism CSV")->required();
  AddBudgetFlags(verify, budget);
  double tolerance = rainbow_dp::kCsvVerifyTolerance;
  verify->add_option("--tolerance", tolerance,
                     "slack added to delta in every closeness check");
  verify->callback([&] {
    code = rainbow_dp::CmdVerify(graph_path, mechanism_path, budget, io,
                                 tolerance);
  });

  rainbow_dp::TrajectoryOptions traj;
  CLI::App* trajectory = app.add_subcommand(
      "trajectory", "optimal distributions along a line, with tau profile");
  trajectory->add_option("--boundary", traj.boundary,
                         "comma-separated boundary vector, preference order")
      ->required();
  trajectory->add_option("--colors", traj.colors,
                         "comma-separated names for the preference ranks");
  trajectory->add_option("--steps", traj.steps, "largest distance t");
  trajectory->add_option("--substeps", traj.substeps,
                         "samples per unit of t");
  trajectory->add_option("--out", traj.out_path,
                         "trajectory CSV (default: stdout)");
  AddBudgetFlags(trajectory, traj.budget);
  trajectory->callback([&] { code = rainbow_dp::CmdTrajectory(traj, io); });

  CLI::App* plot = app.add_subcommand("plot", "render a trajectory CSV as SVG");
  plot->add_option("trajectory", trajectory_path, "trajectory CSV")
      ->required();
  plot->add_option("--out", out_path, "SVG file (default: stdout)");
  AddBudgetFlags(plot, budget);
  plot->callback([&] {
    code = rainbow_dp::CmdPlot(trajectory_path, out_path, budget, io);
  });

  rainbow_dp::DemoOptions demo;
  CLI::App* demo_cmd = app.add_subcommand(
      "demo-no-optimal",
      "five-cycle with a non-homogeneous boundary and no optimal mechanism");
  demo_cmd->add_flag("--homogenized", demo.homogenized,
                     "build the optimal mechanism for a homogenized boundary");
  AddBudgetFlags(demo_cmd, demo.budget);
  demo_cmd->callback([&] { code = rainbow_dp::CmdDemoNoOptimal(demo, io); });

  rainbow_dp::FuzzOptions fuzz;
  CLI::App* fuzz_cmd = app.add_subcommand(
      "fuzz", "search for distributions close to p that beat T(p)");
  fuzz_cmd->add_option("--q", fuzz.q, "number of colors (2..12)");
  fuzz_cmd->add_option("--trials", fuzz.trials, "random base distributions");
  fuzz_cmd->add_option("--samples", fuzz.samples,
                       "close samples per base distribution");
  fuzz_cmd->add_option("--seed", fuzz.seed, "RNG seed");
  fuzz_cmd->add_flag("--mutant-drop-delta", fuzz.mutant_drop_delta)
      ->group("");
  AddBudgetFlags(fuzz_cmd, fuzz.budget);
  fuzz_cmd->callback([&] { code = rainbow_dp::CmdFuzz(fuzz, io); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? rainbow_dp::kExitOk : rainbow_dp::kExitUsage;
  }
  return code;
}
