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

#ifndef RAINBOW_DP_ORACLE_NO_OPTIMAL_DEMO_H_
#define RAINBOW_DP_ORACLE_NO_OPTIMAL_DEMO_H_

#include <optional>

#include "rainbow_dp/core/privacy_budget.h"
#include "rainbow_dp/graph/rainbow_graph.h"
#include "rainbow_dp/mechanism/mechanism.h"
#include "rainbow_dp/mechanism/verify.h"

namespace rainbow_dp {

// The five-cycle d1~d2~d3~d4~d5~d1 over colors 1,2,3 with d1..d4 preferring
// (1,2,3) and d5 preferring (1,3,2).
RainbowGraph PentagonGraph();

// Non-homogeneous boundary d1=(0.2,0.1,0.7), d4=(0.4,0.1,0.5), d5=(0.3,0.1,0.6)
// completed with the interior values of M1, M2 or the forced M3.
Mechanism PentagonMechanismM1();
Mechanism PentagonMechanismM2();
Mechanism PentagonMechanismM3();

// Homogenized boundary: m^(1,2,3) = (0.4,0.1,0.5), m^(1,3,2) = (0.3,0.1,0.6).
BoundaryCondition HomogenizedPentagonBoundary();

struct NoOptimalReport {
  DpReport m1;
  DpReport m2;
  DpReport m3;
  bool boundary_homogeneous = false;
  // The violation on edge (d2, d3) in M3, if any.
  std::optional<DpViolation> m3_edge_violation;

  bool ExpectedVerdicts() const {
    return m1.valid && m2.valid && !m3.valid;
  }
};

// Verifies M1, M2 and the forced M3 on the pentagon; with the canonical
// budget (log 2, 0) the verdicts are valid, valid, invalid.
NoOptimalReport NoOptimalDemo(const PrivacyBudget& budget);

}  // namespace rainbow_dp

#endif  // RAINBOW_DP_ORACLE_NO_OPTIMAL_DEMO_H_
