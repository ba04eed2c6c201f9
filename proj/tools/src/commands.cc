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

#include "rainbow_dp/cli/commands.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "rainbow_dp/cli/csv.h"
#include "rainbow_dp/cli/graph_file.h"
#include "rainbow_dp/cli/svg_plot.h"
#include "rainbow_dp/core/errors.h"
#include "rainbow_dp/mechanism/optimal.h"
#include "rainbow_dp/mechanism/t_operator.h"
#include "rainbow_dp/mechanism/verify.h"
#include "rainbow_dp/oracle/falsify.h"
#include "rainbow_dp/oracle/no_optimal_demo.h"
#include "rainbow_dp/oracle/rng.h"

namespace rainbow_dp {
namespace {

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return MakeError(ErrorKind::kInvalidInput,
                     absl::StrCat("cannot open '", path, "'"));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool WriteOutput(const std::string& path, const std::string& content,
                 CommandIo io) {
  if (path.empty()) {
    io.out << content;
    return true;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) {
    io.err << "error: cannot write '" << path << "'\n";
    return false;
  }
  return true;
}

int ExitFor(const absl::Status& status) {
  switch (GetErrorKind(status).value_or(ErrorKind::kInvalidInput)) {
    case ErrorKind::kInvalidBoundary:
      return kExitViolation;
    case ErrorKind::kUnconstrainedRegion:
      return kExitUnconstrained;
    case ErrorKind::kMissingNode:
    case ErrorKind::kMissingRainbow:
      return kExitIncomplete;
    default:
      return kExitUsage;
  }
}

int Fail(const absl::Status& status, CommandIo io) {
  io.err << "error: " << status.message() << "\n";
  return ExitFor(status);
}

std::string VectorText(const SimplexVector& p) {
  std::vector<std::string> parts;
  for (double v : p.values()) parts.push_back(FormatNumber(v));
  return absl::StrCat("(", absl::StrJoin(parts, ","), ")");
}

absl::StatusOr<SimplexVector> ParseVector(const std::string& text) {
  std::vector<double> p;
  for (absl::string_view part : absl::StrSplit(text, ',')) {
    double v;
    if (!absl::SimpleAtod(part, &v)) {
      return MakeError(ErrorKind::kInvalidInput,
                       absl::StrCat("malformed probability '",
                                    std::string(part), "'"));
    }
    p.push_back(v);
  }
  return SimplexVector::Create(std::move(p));
}

void PrintDpViolations(const DpReport& report, CommandIo io) {
  for (const DpViolation& v : report.violations) {
    io.out << "violation: edge (" << std::min(v.from, v.to) << ","
           << std::max(v.from, v.to) << ") direction " << v.from << "->"
           << v.to << " margin " << FormatNumber(v.margin) << "\n";
  }
}

std::string TauText(const TauProfile& profile) {
  std::vector<std::string> parts;
  for (size_t k = 0; k < profile.tau.size(); ++k) {
    parts.push_back(profile.IsInfinite(static_cast<int>(k))
                        ? "inf"
                        : absl::StrCat(profile.tau[k]));
  }
  return absl::StrJoin(parts, ",");
}

SimplexVector DropDeltaStep(const SimplexVector& p,
                            const PrivacyBudget& budget) {
  return TStep(p, *PrivacyBudget::Create(budget.epsilon(), 0.0));
}

}  // namespace

absl::StatusOr<PrivacyBudget> ResolveBudget(
    const BudgetFlags& flags, std::optional<double> default_exp_epsilon) {
  if (flags.epsilon.has_value() && flags.exp_epsilon.has_value()) {
    return MakeError(ErrorKind::kInvalidInput,
                     "--epsilon and --e-epsilon are mutually exclusive");
  }
  if (flags.epsilon.has_value()) {
    return PrivacyBudget::Create(*flags.epsilon, flags.delta);
  }
  if (flags.exp_epsilon.has_value()) {
    return PrivacyBudget::FromExpEpsilon(*flags.exp_epsilon, flags.delta);
  }
  if (default_exp_epsilon.has_value()) {
    return PrivacyBudget::FromExpEpsilon(*default_exp_epsilon, flags.delta);
  }
  return MakeError(ErrorKind::kInvalidInput,
                   "one of --epsilon or --e-epsilon is required");
}

int CmdBuild(const std::string& graph_path, const BudgetFlags& flags,
             const std::string& out_path, CommandIo io) {
  absl::StatusOr<PrivacyBudget> budget = ResolveBudget(flags, std::nullopt);
  if (!budget.ok()) return Fail(budget.status(), io);
  absl::StatusOr<std::string> text = ReadFile(graph_path);
  if (!text.ok()) return Fail(text.status(), io);
  absl::StatusOr<GraphFile> file = ParseGraphFile(*text);
  if (!file.ok()) return Fail(file.status(), io);

  const BoundaryCondition bc = file->boundary.value_or(BoundaryCondition());
  absl::StatusOr<BoundaryReport> report =
      ValidateBoundaryCondition(file->graph, bc, *budget);
  if (!report.ok()) return Fail(report.status(), io);
  if (!report->valid) {
    const ColorSpace& space = file->graph.color_space();
    for (const BoundaryViolation& v : report->violations) {
      io.err << "boundary violation: (" << v.first.ToString(space) << ") vs ("
             << v.second.ToString(space) << ") margin "
             << FormatNumber(v.margin) << "\n";
    }
    return kExitViolation;
  }
  absl::StatusOr<Mechanism> mechanism =
      OptimalMechanism(file->graph, bc, *budget);
  if (!mechanism.ok()) return Fail(mechanism.status(), io);
  if (!WriteOutput(out_path, WriteMechanismCsv(file->graph, *mechanism), io)) {
    return kExitUsage;
  }
  return kExitOk;
}

int CmdVerify(const std::string& graph_path, const std::string& mechanism_path,
              const BudgetFlags& flags, CommandIo io, double tolerance) {
  absl::StatusOr<PrivacyBudget> budget = ResolveBudget(flags, std::nullopt);
  if (!budget.ok()) return Fail(budget.status(), io);
  absl::StatusOr<std::string> graph_text = ReadFile(graph_path);
  if (!graph_text.ok()) return Fail(graph_text.status(), io);
  absl::StatusOr<GraphFile> file = ParseGraphFile(*graph_text);
  if (!file.ok()) return Fail(file.status(), io);
  absl::StatusOr<std::string> mech_text = ReadFile(mechanism_path);
  if (!mech_text.ok()) return Fail(mech_text.status(), io);
  absl::StatusOr<Mechanism> mechanism =
      ParseMechanismCsv(*mech_text, file->graph.color_space());
  if (!mechanism.ok()) return Fail(mechanism.status(), io);

  absl::StatusOr<DpReport> report = VerifyDp(file->graph, *mechanism, *budget, tolerance);
  if (!report.ok()) return Fail(report.status(), io);
  if (!report->valid) {
    PrintDpViolations(*report, io);
    io.out << "invalid: " << report->violations.size() << " violation(s)\n";
    return kExitViolation;
  }
  io.out << "valid\n";
  return kExitOk;
}

int CmdTrajectory(const TrajectoryOptions& options, CommandIo io) {
  absl::StatusOr<PrivacyBudget> budget =
      ResolveBudget(options.budget, std::nullopt);
  if (!budget.ok()) return Fail(budget.status(), io);
  absl::StatusOr<SimplexVector> m = ParseVector(options.boundary);
  if (!m.ok()) return Fail(m.status(), io);
  if (options.steps < 0 || options.substeps < 1) {
    io.err << "error: need --steps >= 0 and --substeps >= 1\n";
    return kExitUsage;
  }
  ColorSpace colors = ColorSpace::Numbered(m->size());
  if (!options.colors.empty()) {
    absl::StatusOr<ColorSpace> named = ColorSpace::Create(
        absl::StrSplit(options.colors, ','));
    if (!named.ok()) return Fail(named.status(), io);
    if (named->size() != m->size()) {
      io.err << "error: --colors names " << named->size()
             << " colors but the boundary has " << m->size() << "\n";
      return kExitUsage;
    }
    colors = *std::move(named);
  }

  // With the CSV on stdout, the profile goes to stderr to keep it parseable.
  std::ostream& info = options.out_path.empty() ? io.err : io.out;
  absl::StatusOr<TauProfile> profile = ComputeTauProfile(*m, *budget);
  if (profile.ok()) {
    info << "rho=" << FormatNumber(profile->rho) << "\n";
    info << "tau=" << TauText(*profile) << "\n";
  } else {
    info << "rho=undefined\ntau=undefined (epsilon = 0)\n";
  }
  const TrajectoryTable table =
      BuildTrajectory(*m, *budget, colors, options.steps, options.substeps);
  if (!WriteOutput(options.out_path, WriteTrajectoryCsv(table), io)) {
    return kExitUsage;
  }
  return kExitOk;
}

int CmdPlot(const std::string& trajectory_path, const std::string& out_path,
            const BudgetFlags& flags, CommandIo io) {
  absl::StatusOr<std::string> text = ReadFile(trajectory_path);
  if (!text.ok()) return Fail(text.status(), io);
  absl::StatusOr<TrajectoryTable> table = ParseTrajectoryCsv(*text);
  if (!table.ok()) return Fail(table.status(), io);

  std::optional<TauProfile> tau;
  if (flags.epsilon.has_value() || flags.exp_epsilon.has_value()) {
    absl::StatusOr<PrivacyBudget> budget = ResolveBudget(flags, std::nullopt);
    if (!budget.ok()) return Fail(budget.status(), io);
    std::vector<double> initial;
    for (const TrajectoryRow& row : *table) {
      if (row.t != 0.0) break;
      initial.push_back(row.p);
    }
    absl::StatusOr<SimplexVector> m = SimplexVector::Create(initial);
    if (!m.ok()) return Fail(m.status(), io);
    absl::StatusOr<TauProfile> profile = ComputeTauProfile(*m, *budget);
    if (profile.ok()) tau = *std::move(profile);
  }
  if (!WriteOutput(out_path, RenderTrajectorySvg(*table, tau), io)) {
    return kExitUsage;
  }
  return kExitOk;
}

int CmdDemoNoOptimal(const DemoOptions& options, CommandIo io) {
  absl::StatusOr<PrivacyBudget> budget = ResolveBudget(options.budget, 2.0);
  if (!budget.ok()) return Fail(budget.status(), io);

  if (options.homogenized) {
    const RainbowGraph graph = PentagonGraph();
    absl::StatusOr<Mechanism> mechanism =
        OptimalMechanism(graph, HomogenizedPentagonBoundary(), *budget);
    if (!mechanism.ok()) return Fail(mechanism.status(), io);
    io.out << WriteMechanismCsv(graph, *mechanism);
    const DpReport report = *VerifyDp(graph, *mechanism, *budget);
    const bool homogeneous = *IsBoundaryHomogeneous(graph, *mechanism);
    io.out << "valid: " << (report.valid ? "true" : "false") << "\n";
    io.out << "boundary homogeneous: " << (homogeneous ? "true" : "false")
           << "\n";
    return report.valid && homogeneous ? kExitOk : kExitViolation;
  }

  const NoOptimalReport report = NoOptimalDemo(*budget);
  auto verdict = [](const DpReport& r) { return r.valid ? "true" : "false"; };
  io.out << "e^epsilon=" << FormatNumber(budget->exp_epsilon())
         << " delta=" << FormatNumber(budget->delta()) << "\n";
  io.out << "M1 valid: " << verdict(report.m1) << "\n";
  io.out << "M2 valid: " << verdict(report.m2) << "\n";
  io.out << "M3 valid: " << verdict(report.m3) << "\n";
  PrintDpViolations(report.m3, io);
  if (report.m3_edge_violation.has_value()) {
    io.out << "margin: " << FormatNumber(report.m3_edge_violation->margin)
           << "\n";
  }
  io.out << "boundary homogeneous: "
         << (report.boundary_homogeneous ? "true" : "false") << "\n";

  const bool canonical = std::abs(budget->exp_epsilon() - 2.0) < 1e-12 &&
                         budget->delta() == 0.0;
  if (canonical && !report.ExpectedVerdicts()) return kExitViolation;
  return kExitOk;
}

int CmdFuzz(const FuzzOptions& options, CommandIo io) {
  if (options.q < 2 || options.q > 12) {
    io.err << "error: --q must lie in [2,12]\n";
    return kExitUsage;
  }
  if (options.trials < 0 || options.samples < 1) {
    io.err << "error: need --trials >= 0 and --samples >= 1\n";
    return kExitUsage;
  }
  absl::StatusOr<PrivacyBudget> budget = ResolveBudget(options.budget, 2.0);
  if (!budget.ok()) return Fail(budget.status(), io);
  const StepOperator step =
      options.mutant_drop_delta ? StepOperator(DropDeltaStep) : StepOperator(TStep);

  for (int64_t trial = 0; trial < options.trials; ++trial) {
    Rng rng(SubSeed(options.seed, 2 * static_cast<uint64_t>(trial)));
    const SimplexVector p = UniformSimplex(rng, options.q);
    const FalsificationReport report = DominanceFalsify(
        p, *budget, options.samples,
        SubSeed(options.seed, 2 * static_cast<uint64_t>(trial) + 1), step);
    if (report.counterexample.has_value()) {
      const Counterexample& ce = *report.counterexample;
      io.out << "counterexample trial=" << trial << " p=" << VectorText(p)
             << " sample=" << VectorText(ce.sample)
             << " prefix=" << ce.prefix_index
             << " margin=" << FormatNumber(ce.margin) << " check="
             << (ce.check == Counterexample::Check::kDominance ? "dominance"
                                                               : "envelope")
             << "\n";
      return kExitFalsified;
    }
  }
  io.out << "fuzz q=" << options.q << " trials=" << options.trials
         << " samples=" << options.samples << " seed=" << options.seed
         << " epsilon=" << FormatNumber(budget->epsilon())
         << " delta=" << FormatNumber(budget->delta())
         << " counterexamples=0\n";
  return kExitOk;
}

}  // namespace rainbow_dp
