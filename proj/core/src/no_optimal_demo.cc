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

#include "rainbow_dp/oracle/no_optimal_demo.h"

#include <cassert>
#include <vector>

namespace rainbow_dp {
namespace {

ColorSpace ThreeColors() { return ColorSpace::Numbered(3); }

SimplexVector Vec(std::vector<double> p) {
  absl::StatusOr<SimplexVector> v = SimplexVector::Create(std::move(p));
  assert(v.ok());
  return *std::move(v);
}

Mechanism WithInterior(SimplexVector d2, SimplexVector d3) {
  Mechanism m(ThreeColors());
  (void)m.Set("d1", Vec({0.2, 0.1, 0.7}));
  (void)m.Set("d2", std::move(d2));
  (void)m.Set("d3", std::move(d3));
  (void)m.Set("d4", Vec({0.4, 0.1, 0.5}));
  (void)m.Set("d5", Vec({0.3, 0.1, 0.6}));
  return m;
}

}  // namespace

RainbowGraph PentagonGraph() {
  const Rainbow plain = Rainbow::Identity(3);
  const Rainbow swapped = *Rainbow::Create({0, 2, 1});
  absl::StatusOr<RainbowGraph> g = RainbowGraph::Create(
      ThreeColors(),
      {{"d1", plain}, {"d2", plain}, {"d3", plain}, {"d4", plain},
       {"d5", swapped}},
      {{"d1", "d2"}, {"d2", "d3"}, {"d3", "d4"}, {"d4", "d5"}, {"d5", "d1"}});
  assert(g.ok());
  return *std::move(g);
}

Mechanism PentagonMechanismM1() {
  return WithInterior(Vec({0.4, 0.2, 0.4}), Vec({0.4, 0.2, 0.4}));
}

Mechanism PentagonMechanismM2() {
  return WithInterior(Vec({0.4, 0.1, 0.5}), Vec({0.7, 0.05, 0.25}));
}

Mechanism PentagonMechanismM3() {
  return WithInterior(Vec({0.4, 0.2, 0.4}), Vec({0.7, 0.05, 0.25}));
}

BoundaryCondition HomogenizedPentagonBoundary() {
  BoundaryCondition bc;
  bc.Set(Rainbow::Identity(3), Vec({0.4, 0.1, 0.5}));
  bc.Set(*Rainbow::Create({0, 2, 1}), Vec({0.3, 0.1, 0.6}));
  return bc;
}

NoOptimalReport NoOptimalDemo(const PrivacyBudget& budget) {
  const RainbowGraph graph = PentagonGraph();
  NoOptimalReport report;
  report.m1 = *VerifyDp(graph, PentagonMechanismM1(), budget);
  report.m2 = *VerifyDp(graph, PentagonMechanismM2(), budget);
  report.m3 = *VerifyDp(graph, PentagonMechanismM3(), budget);
  report.boundary_homogeneous =
      *IsBoundaryHomogeneous(graph, PentagonMechanismM1());
  for (const DpViolation& v : report.m3.violations) {
    if ((v.from == "d2" && v.to == "d3") || (v.from == "d3" && v.to == "d2")) {
      report.m3_edge_violation = v;
      break;
    }
  }
  return report;
}

}  // namespace rainbow_dp
