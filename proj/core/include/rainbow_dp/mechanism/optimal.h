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

#ifndef RAINBOW_DP_MECHANISM_OPTIMAL_H_
#define RAINBOW_DP_MECHANISM_OPTIMAL_H_

#include <vector>

#include "absl/status/statusor.h"
#include "rainbow_dp/core/privacy_budget.h"
#include "rainbow_dp/core/simplex_vector.h"
#include "rainbow_dp/graph/boundary_graph.h"
#include "rainbow_dp/graph/rainbow_graph.h"
#include "rainbow_dp/mechanism/mechanism.h"

namespace rainbow_dp {

// Distributions T^0(m), ..., T^n(m) on the (c,n)-line, all in the
// preference order of m.
std::vector<SimplexVector> LineDistributions(const SimplexVector& m,
                                             const PrivacyBudget& budget,
                                             int n);

// The (c,n)-line: nodes "0".."n", i ~ i+1, every node preferring `rainbow`.
absl::StatusOr<RainbowGraph> MakeLineGraph(const ColorSpace& space,
                                           const Rainbow& rainbow, int n);

// Optimal mechanism on the (identity, n)-line over colors "1".."q", with
// boundary m at node "0".
Mechanism LineMechanism(const SimplexVector& m, const PrivacyBudget& budget,
                        int n);

struct BoundaryViolation {
  Rainbow first;
  Rainbow second;
  // Largest amount by which delta is exceeded, over both directions.
  double margin;
};

struct BoundaryReport {
  bool valid = true;
  std::vector<BoundaryViolation> violations;
};

// Checks that m^c and m^c' are close for every pair of touching regions.
// Fails with MissingRainbow when a region with nonempty boundary has no
// vector in `bc`.
absl::StatusOr<BoundaryReport> ValidateBoundaryCondition(
    const RainbowGraph& graph, const BoundaryCondition& bc,
    const PrivacyBudget& budget);

// The unique optimal boundary-homogeneous mechanism: node d with rainbow c
// gets T^dist(d, ∂B^c) of m^c, evaluated in c's preference order and
// stored back in canonical order. Fails with InvalidBoundary (naming the
// offending rainbow pairs) or UnconstrainedRegion.
absl::StatusOr<Mechanism> OptimalMechanism(const RainbowGraph& graph,
                                           const BoundaryCondition& bc,
                                           const PrivacyBudget& budget);

// Line mechanisms on every chain of a boundary graph: (c,i) -> T^i(m^c).
// Pulled back along the boundary morphism this gives OptimalMechanism by a
// second route.
absl::StatusOr<Mechanism> BoundaryGraphMechanism(const BoundaryGraph& boundary,
                                                 const BoundaryCondition& bc,
                                                 const PrivacyBudget& budget);

}  // namespace rainbow_dp

#endif  // RAINBOW_DP_MECHANISM_OPTIMAL_H_
