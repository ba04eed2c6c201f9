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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "rainbow_dp/cli/commands.h"
#include "rainbow_dp/cli/csv.h"
#include "rainbow_dp/cli/graph_file.h"
#include "rainbow_dp/cli/svg_plot.h"
#include "rainbow_dp/graph/regions.h"
#include "rainbow_dp/mechanism/optimal.h"
#include "rainbow_dp/mechanism/t_operator.h"
#include "rainbow_dp/oracle/rng.h"
#include "test_support.h"

namespace rainbow_dp {
namespace {

using ::rainbow_dp::testing::Budget;
using ::rainbow_dp::testing::RandomSolvableGraph;
using ::rainbow_dp::testing::RandomValidBoundary;
using ::rainbow_dp::testing::Rb;
using ::rainbow_dp::testing::Vec;
using ::testing::HasSubstr;
using ::testing::StartsWith;

std::string Data(const std::string& name) {
  return std::string(RAINBOW_DP_DATA_DIR) + "/" + name;
}

std::string ReadAll(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() /
          ("rainbow_dp_cli_test_" + std::to_string(::getpid()) + "_" + name))
      .string();
}

int Count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

BudgetFlags EExp(double e, double delta = 0.0) {
  BudgetFlags flags;
  flags.exp_epsilon = e;
  flags.delta = delta;
  return flags;
}

struct Captured {
  std::ostringstream out;
  std::ostringstream err;
  CommandIo io() { return {out, err}; }
};

std::string ParseError(const std::string& text) {
  absl::StatusOr<GraphFile> file = ParseGraphFile(text);
  return file.ok() ? "" : std::string(file.status().message());
}

TEST(GraphFileTest, MinimalFile) {
  ASSERT_OK_AND_ASSIGN(GraphFile file, ParseGraphFile(ReadAll(Data("minimal.rg"))));
  EXPECT_EQ(file.graph.color_space().size(), 2);
  EXPECT_EQ(file.graph.num_nodes(), 2);
  ASSERT_TRUE(file.boundary.has_value());
  EXPECT_EQ(file.boundary->values().size(), 2u);
}

TEST(GraphFileTest, PentagonRegions) {
  ASSERT_OK_AND_ASSIGN(GraphFile file, ParseGraphFile(ReadAll(Data("pentagon.rg"))));
  EXPECT_FALSE(file.boundary.has_value());
  RegionDecomposition regions = DecomposeRegions(file.graph);
  const Region* c = regions.Find(Rb({0, 1, 2}));
  ASSERT_NE(c, nullptr);
  std::vector<std::string> boundary;
  for (int d : c->boundary) boundary.push_back(file.graph.id(d));
  EXPECT_THAT(boundary, ::testing::ElementsAre("d1", "d4"));
}

TEST(GraphFileTest, LineNumberedDiagnostics) {
  const std::string head = "colors a b c\nnode x a b c\n";
  EXPECT_THAT(ParseError(head + "node y a b c\nedge y y\n"), HasSubstr("line 4"));
  EXPECT_THAT(ParseError(head + "node y a b c\nedge y y\n"), HasSubstr("self-loop"));
  EXPECT_THAT(ParseError(head + "node x a b c\n"), HasSubstr("line 3"));
  EXPECT_THAT(ParseError(head + "node y a b z\n"), HasSubstr("line 3"));
  EXPECT_THAT(ParseError(head + "node y a a c\n"), HasSubstr("line 3"));
  EXPECT_THAT(ParseError(head + "\n\nedge x q\n"), HasSubstr("line 5"));
  EXPECT_THAT(ParseError(head + "boundary a,b,c 0.5 abc 0.5\n"), HasSubstr("line 3"));
  EXPECT_THAT(ParseError(head + "boundary a,b,c 0.5 0.5\n"), HasSubstr("line 3"));
  EXPECT_THAT(ParseError(head + "boundary a,b,c 0.5 0.9 0.5\n"), HasSubstr("line 3"));
  EXPECT_THAT(ParseError(head + "boundary a,b 0.5 0.4 0.1\n"), HasSubstr("line 3"));
  EXPECT_THAT(ParseError(head + "bogus x\n"), HasSubstr("line 3"));
  EXPECT_THAT(ParseError("node x a b\n"), HasSubstr("line 1"));
  EXPECT_THAT(ParseError("# only a comment\n"), HasSubstr("colors"));
}

TEST(GraphFileTest, RoundTrip) {
  for (const char* name : {"five_path.rg", "pentagon.rg", "minimal.rg", "unconstrained.rg"}) {
    SCOPED_TRACE(name);
    ASSERT_OK_AND_ASSIGN(GraphFile a, ParseGraphFile(ReadAll(Data(name))));
    ASSERT_OK_AND_ASSIGN(GraphFile b, ParseGraphFile(EmitGraphFile(a)));
    EXPECT_EQ(a.graph.color_space(), b.graph.color_space());
    EXPECT_EQ(a.graph.ids(), b.graph.ids());
    EXPECT_EQ(a.graph.edges(), b.graph.edges());
    for (int d = 0; d < a.graph.num_nodes(); ++d) {
      EXPECT_EQ(a.graph.preference(d), b.graph.preference(d));
    }
    EXPECT_EQ(a.boundary.has_value(), b.boundary.has_value());
    if (a.boundary) EXPECT_EQ(a.boundary->values(), b.boundary->values());
    EXPECT_EQ(EmitGraphFile(a), EmitGraphFile(b));
  }
}

TEST(GraphFileTest, RandomRoundTrip) {
  for (int i = 0; i < 50; ++i) {
    Rng rng(SubSeed(41, i));
    GraphFile file{RandomSolvableGraph(rng, 4, 30, 4), std::nullopt};
    file.boundary = RandomValidBoundary(rng, file.graph, Budget(2.0, 0.01));
    ASSERT_OK_AND_ASSIGN(GraphFile back, ParseGraphFile(EmitGraphFile(file)));
    EXPECT_EQ(back.graph.ids(), file.graph.ids());
    EXPECT_EQ(back.graph.edges(), file.graph.edges());
    ASSERT_TRUE(back.boundary.has_value());
    for (const auto& [c, v] : file.boundary->values()) {
      EXPECT_LE(testing::MaxAbsDiff({v.values().begin(), v.values().end()},
                                    {back.boundary->Find(c)->values().begin(),
                                     back.boundary->Find(c)->values().end()}),
                1e-11);
    }
  }
}

TEST(CsvTest, FormatNumber) {
  EXPECT_EQ(FormatNumber(0.1), "0.1");
  EXPECT_EQ(FormatNumber(1.0), "1");
  EXPECT_EQ(FormatNumber(-0.0), "0");
  EXPECT_EQ(FormatNumber(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(FormatNumber(1e-20), "1e-20");
}

TEST(CsvTest, MechanismRoundTrip) {
  ASSERT_OK_AND_ASSIGN(GraphFile file, ParseGraphFile(ReadAll(Data("five_path.rg"))));
  ASSERT_OK_AND_ASSIGN(Mechanism m, OptimalMechanism(file.graph, *file.boundary, Budget(2.0, 0.0)));
  const std::string csv = WriteMechanismCsv(file.graph, m);
  EXPECT_THAT(csv, StartsWith("node,blue,red,green\n"));
  EXPECT_EQ(Count(csv, "\n"), 6);
  ASSERT_OK_AND_ASSIGN(Mechanism back, ParseMechanismCsv(csv, file.graph.color_space()));
  EXPECT_EQ(WriteMechanismCsv(file.graph, back), csv);
}

TEST(CsvTest, MechanismColumnsByName) {
  ASSERT_OK_AND_ASSIGN(ColorSpace space, ColorSpace::Create({"a", "b"}));
  ASSERT_OK_AND_ASSIGN(Mechanism m, ParseMechanismCsv("node,b,a\nx,0.25,0.75\n", space));
  EXPECT_EQ((*m.Find("x"))[0], 0.75);
  EXPECT_FALSE(ParseMechanismCsv("node,a,c\nx,0.5,0.5\n", space).ok());
  EXPECT_FALSE(ParseMechanismCsv("node,a,b\nx,0.5,nope\n", space).ok());
  EXPECT_FALSE(ParseMechanismCsv("node,a,b\nx,0.5,0.5\nx,0.5,0.5\n", space).ok());
}

TEST(CsvTest, TrajectoryRoundTrip) {
  TrajectoryTable table = BuildTrajectory(Vec({0.1, 0.2, 0.7}), Budget(2.0, 0.01),
                                          ColorSpace::Numbered(3), 5, 4);
  const std::string csv = WriteTrajectoryCsv(table);
  EXPECT_THAT(csv, StartsWith("t,k,color,p,s\n"));
  ASSERT_OK_AND_ASSIGN(TrajectoryTable back, ParseTrajectoryCsv(csv));
  EXPECT_EQ(WriteTrajectoryCsv(back), csv);
  EXPECT_FALSE(ParseTrajectoryCsv("t,k,color,p,s\n0,1,a,x,0.5\n").ok());
  EXPECT_FALSE(ParseTrajectoryCsv("t,k\n").ok());
}

TEST(CommandsTest, BuildAndVerify) {
  Captured build;
  const std::string out = TempPath("five_path.csv");
  EXPECT_EQ(CmdBuild(Data("five_path.rg"), EExp(2.0), out, build.io()), kExitOk);
  Captured verify;
  EXPECT_EQ(CmdVerify(Data("five_path.rg"), out, EExp(2.0), verify.io()), kExitOk);
  EXPECT_THAT(verify.out.str(), HasSubstr("valid"));
  ASSERT_OK_AND_ASSIGN(Mechanism m,
                       ParseMechanismCsv(ReadAll(out), *ColorSpace::Create({"blue", "red", "green"})));
  EXPECT_EQ(m.size(), 5);
  std::remove(out.c_str());
}

TEST(CommandsTest, BuildToStdout) {
  Captured c;
  EXPECT_EQ(CmdBuild(Data("pentagon_homogenized.rg"), EExp(2.0), "", c.io()), kExitOk);
  EXPECT_THAT(c.out.str(), HasSubstr("d2,0.7,0.05,0.25"));
}

TEST(CommandsTest, BuildErrors) {
  Captured far;
  EXPECT_EQ(CmdBuild(Data("five_path_far_boundary.rg"), EExp(2.0), "", far.io()),
            kExitViolation);
  EXPECT_THAT(far.err.str(), HasSubstr("red,blue,green"));
  Captured unconstrained;
  EXPECT_EQ(CmdBuild(Data("unconstrained.rg"), EExp(2.0), "", unconstrained.io()),
            kExitUnconstrained);
  Captured no_boundary;
  EXPECT_EQ(CmdBuild(Data("pentagon.rg"), EExp(2.0), "", no_boundary.io()), kExitIncomplete);
  Captured missing_file;
  EXPECT_EQ(CmdBuild(Data("does_not_exist.rg"), EExp(2.0), "", missing_file.io()), kExitUsage);
  Captured no_budget;
  EXPECT_EQ(CmdBuild(Data("five_path.rg"), BudgetFlags{}, "", no_budget.io()), kExitUsage);
}

TEST(CommandsTest, VerifyPentagonMechanisms) {
  Captured m1;
  EXPECT_EQ(CmdVerify(Data("pentagon.rg"), Data("pentagon_m1.csv"), EExp(2.0), m1.io()), kExitOk);
  Captured m3;
  EXPECT_EQ(CmdVerify(Data("pentagon.rg"), Data("pentagon_m3.csv"), EExp(2.0), m3.io()),
            kExitViolation);
  EXPECT_THAT(m3.out.str(), HasSubstr("edge (d2,d3)"));
  EXPECT_THAT(m3.out.str(), HasSubstr("margin 0.1"));
  Captured truncated;
  EXPECT_EQ(CmdVerify(Data("pentagon.rg"), Data("pentagon_truncated.csv"), EExp(2.0),
                      truncated.io()),
            kExitIncomplete);
}

TEST(CommandsTest, TrajectoryPrintsTau) {
  const std::pair<double, std::string> cases[] = {
      {0.0, "tau=38,22,7,1,0"}, {0.001, "tau=25,20,7,1,0"}, {0.01, "tau=13,12,6,1,0"}};
  for (const auto& [delta, expected] : cases) {
    TrajectoryOptions options;
    options.boundary = "0.0005,0.0081,0.1364,0.2727,0.5822";
    options.budget.epsilon = 0.1823215568;
    options.budget.delta = delta;
    options.out_path = TempPath("traj.csv");
    Captured c;
    EXPECT_EQ(CmdTrajectory(options, c.io()), kExitOk);
    EXPECT_THAT(c.out.str(), HasSubstr(expected));
    ASSERT_OK_AND_ASSIGN(TrajectoryTable table, ParseTrajectoryCsv(ReadAll(options.out_path)));
    EXPECT_EQ(table.size(), 601u * 5u);
    std::remove(options.out_path.c_str());
  }
}

TEST(CommandsTest, TrajectoryEpsilonZeroAndErrors) {
  TrajectoryOptions options;
  options.boundary = "0,0,1";
  options.budget.epsilon = 0.0;
  options.budget.delta = 0.1;
  options.steps = 3;
  options.substeps = 1;
  Captured c;
  EXPECT_EQ(CmdTrajectory(options, c.io()), kExitOk);
  EXPECT_THAT(c.out.str(), HasSubstr("3,1,1,0.3,0.3"));
  options.boundary = "0.5,abc";
  Captured bad;
  EXPECT_EQ(CmdTrajectory(options, bad.io()), kExitUsage);
  options.boundary = "0.5,0.5";
  options.substeps = 0;
  Captured bad_substeps;
  EXPECT_EQ(CmdTrajectory(options, bad_substeps.io()), kExitUsage);
}

std::string PlotFor(const std::string& boundary, int steps, bool with_budget) {
  TrajectoryOptions options;
  options.boundary = boundary;
  options.budget.epsilon = 0.1823215568;
  options.steps = steps;
  options.out_path = TempPath("plot.csv");
  Captured t;
  EXPECT_EQ(CmdTrajectory(options, t.io()), kExitOk);
  const std::string svg = TempPath("plot.svg");
  Captured p;
  EXPECT_EQ(CmdPlot(options.out_path, svg, with_budget ? options.budget : BudgetFlags{}, p.io()),
            kExitOk);
  std::string text = ReadAll(svg);
  std::remove(options.out_path.c_str());
  std::remove(svg.c_str());
  return text;
}

TEST(CommandsTest, PlotFigureTwo) {
  const std::string svg = PlotFor("0.0005,0.0081,0.1364,0.2727,0.5822", 60, true);
  EXPECT_THAT(svg, StartsWith("<svg"));
  EXPECT_THAT(svg, HasSubstr("width=\"800\" height=\"500\""));
  EXPECT_EQ(Count(svg, "<polyline class=\"series\""), 5);
  EXPECT_EQ(Count(svg, "class=\"tau\""), 5);
  EXPECT_EQ(Count(svg, "stroke-dasharray=\"4 4\""), 5);
  const std::string no_markers = PlotFor("0.0005,0.0081,0.1364,0.2727,0.5822", 60, false);
  EXPECT_EQ(Count(no_markers, "class=\"tau\""), 0);
}

TEST(CommandsTest, PlotBinaryAndEmpty) {
  EXPECT_EQ(Count(PlotFor("0.3,0.7", 10, false), "<polyline class=\"series\""), 2);
  const std::string empty = PlotFor("0.2,0.3,0.5", 0, false);
  EXPECT_EQ(Count(empty, "<circle class=\"point\""), 3);
}

TEST(CommandsTest, PlotRejectsMalformedCsv) {
  const std::string path = TempPath("bad.csv");
  std::ofstream(path) << "t,k,color,p,s\n0,1,a,zz,1\n";
  Captured c;
  EXPECT_EQ(CmdPlot(path, TempPath("bad.svg"), BudgetFlags{}, c.io()), kExitUsage);
  std::remove(path.c_str());
}

TEST(CommandsTest, DemoNoOptimal) {
  Captured c;
  EXPECT_EQ(CmdDemoNoOptimal(DemoOptions{}, c.io()), kExitOk);
  EXPECT_THAT(c.out.str(), HasSubstr("margin: 0.1"));
  DemoOptions three;
  three.budget.exp_epsilon = 3.0;
  Captured c3;
  EXPECT_EQ(CmdDemoNoOptimal(three, c3.io()), kExitOk);
  DemoOptions homogenized;
  homogenized.homogenized = true;
  Captured ch;
  EXPECT_EQ(CmdDemoNoOptimal(homogenized, ch.io()), kExitOk);
  EXPECT_THAT(ch.out.str(), HasSubstr("node,1,2,3"));
}

TEST(CommandsTest, Fuzz) {
  FuzzOptions options;
  options.q = 5;
  options.trials = 1000;
  options.seed = 42;
  options.budget.epsilon = 0.18;
  options.budget.delta = 0.01;
  options.samples = 20;
  Captured c;
  EXPECT_EQ(CmdFuzz(options, c.io()), kExitOk);

  FuzzOptions small;
  small.q = 3;
  small.trials = 1;
  small.seed = 1;
  Captured a;
  Captured b;
  EXPECT_EQ(CmdFuzz(small, a.io()), kExitOk);
  EXPECT_EQ(CmdFuzz(small, b.io()), kExitOk);
  EXPECT_EQ(a.out.str(), b.out.str());
  EXPECT_FALSE(a.out.str().empty());

  FuzzOptions mutant = small;
  mutant.budget.delta = 0.1;
  mutant.mutant_drop_delta = true;
  Captured m;
  EXPECT_EQ(CmdFuzz(mutant, m.io()), kExitFalsified);
  EXPECT_THAT(m.out.str(), HasSubstr("counterexample"));

  FuzzOptions bad = small;
  bad.q = 13;
  Captured x;
  EXPECT_EQ(CmdFuzz(bad, x.io()), kExitUsage);
}

TEST(CommandsTest, BuildOutputPassesVerify) {
  for (int i = 0; i < 40; ++i) {
    SCOPED_TRACE(i);
    Rng rng(SubSeed(42, i));
    GraphFile file{RandomSolvableGraph(rng, static_cast<int>(rng.UniformInt(2, 5)), 25, 4),
                   std::nullopt};
    const PrivacyBudget budget = testing::RandomBudget(rng);
    file.boundary = RandomValidBoundary(rng, file.graph, budget);
    const std::string graph_path = TempPath("random.rg");
    const std::string mech_path = TempPath("random.csv");
    std::ofstream(graph_path) << EmitGraphFile(file);
    BudgetFlags flags;
    flags.epsilon = budget.epsilon();
    flags.delta = budget.delta();
    Captured build;
    ASSERT_EQ(CmdBuild(graph_path, flags, mech_path, build.io()), kExitOk) << build.err.str();
    Captured verify;
    EXPECT_EQ(CmdVerify(graph_path, mech_path, flags, verify.io()), kExitOk)
        << "delta=" << budget.delta() << "\n" << verify.out.str();
    std::remove(graph_path.c_str());
    std::remove(mech_path.c_str());
  }
}

TEST(ToolBinaryTest, UsageErrorsExitOne) {
  const std::string tool = RAINBOW_DP_TOOL;
  EXPECT_EQ(WEXITSTATUS(std::system((tool + " >/dev/null 2>&1").c_str())), 1);
  EXPECT_EQ(WEXITSTATUS(std::system(
                (tool + " build x --epsilon 1 --e-epsilon 2 >/dev/null 2>&1").c_str())),
            1);
  EXPECT_EQ(WEXITSTATUS(std::system((tool + " demo-no-optimal >/dev/null").c_str())), 0);
}

}  // namespace
}  // namespace rainbow_dp
