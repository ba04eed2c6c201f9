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

#ifndef RAINBOW_DP_MECHANISM_VERIFY_H_
#define RAINBOW_DP_MECHANISM_VERIFY_H_

#include <map>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "rainbow_dp/core/predicates.h"
#include "rainbow_dp/core/privacy_budget.h"
#include "rainbow_dp/graph/rainbow_graph.h"
#include "rainbow_dp/mechanism/mechanism.h"

namespace rainbow_dp {

// P_from(S) <= e^eps P_to(S) + delta fails for some S; `margin` is the
// excess over delta (the worst S is taken).
struct DpViolation {
  std::string from;
  std::string to;
  double margin;
};

struct DpReport {
  bool valid = true;
  std::vector<DpViolation> violations;
};

// Edgewise (eps, delta)-closeness over the whole graph.
absl::StatusOr<DpReport> VerifyDp(const RainbowGraph& graph,
                                  const Mechanism& mechanism,
                                  const PrivacyBudget& budget,
                                  double tol = kDefaultTolerance);

// All boundary datasets of each region share one distribution (within tol).
absl::StatusOr<bool> IsBoundaryHomogeneous(const RainbowGraph& graph,
                                           const Mechanism& mechanism,
                                           double tol = kDefaultTolerance);

// Expected total utility sum_d sum_k w_d[k] P[M(d) = f(d)_k]. Each weight
// sequence is indexed by preference rank and must be nonincreasing.
absl::StatusOr<double> UtilityEval(
    const RainbowGraph& graph, const Mechanism& mechanism,
    const std::map<std::string, std::vector<double>>& weights);

}  // namespace rainbow_dp

#endif  // RAINBOW_DP_MECHANISM_VERIFY_H_
