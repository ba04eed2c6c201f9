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

#include "rainbow_dp/mechanism/verify.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "rainbow_dp/core/errors.h"
#include "rainbow_dp/graph/regions.h"

namespace rainbow_dp {

absl::StatusOr<DpReport> VerifyDp(const RainbowGraph& graph,
                                  const Mechanism& mechanism,
                                  const PrivacyBudget& budget, double tol) {
  if (absl::Status s = CheckCovers(mechanism, graph); !s.ok()) return s;
  const double e = budget.exp_epsilon();
  DpReport report;
  for (const auto& [a, b] : graph.edges()) {
    const SimplexVector& pa = *mechanism.Find(graph.id(a));
    const SimplexVector& pb = *mechanism.Find(graph.id(b));
    const double forward = *HockeyStickDivergence(pa, pb, e) - budget.delta();
    const double backward = *HockeyStickDivergence(pb, pa, e) - budget.delta();
    if (forward > tol) {
      report.valid = false;
      report.violations.push_back({graph.id(a), graph.id(b), forward});
    }
    if (backward > tol) {
      report.valid = false;
      report.violations.push_back({graph.id(b), graph.id(a), backward});
    }
  }
  return report;
}

absl::StatusOr<bool> IsBoundaryHomogeneous(const RainbowGraph& graph,
                                           const Mechanism& mechanism,
                                           double tol) {
  if (absl::Status s = CheckCovers(mechanism, graph); !s.ok()) return s;
  for (const Region& region : DecomposeRegions(graph).regions) {
    if (region.boundary.empty()) continue;
    const SimplexVector& first = *mechanism.Find(graph.id(region.boundary[0]));
    for (int d : region.boundary) {
      const SimplexVector& p = *mechanism.Find(graph.id(d));
      for (int v = 0; v < p.size(); ++v) {
        if (std::abs(p[v] - first[v]) > tol) return false;
      }
    }
  }
  return true;
}

absl::StatusOr<double> UtilityEval(
    const RainbowGraph& graph, const Mechanism& mechanism,
    const std::map<std::string, std::vector<double>>& weights) {
  if (absl::Status s = CheckCovers(mechanism, graph); !s.ok()) return s;
  const int q = graph.color_space().size();
  double total = 0.0;
  for (int d = 0; d < graph.num_nodes(); ++d) {
    auto it = weights.find(graph.id(d));
    if (it == weights.end()) {
      return MakeError(ErrorKind::kMissingNode,
                       absl::StrCat("no weights for node '", graph.id(d), "'"));
    }
    const std::vector<double>& w = it->second;
    if (static_cast<int>(w.size()) != q) {
      return MakeError(ErrorKind::kLengthMismatch,
                       absl::StrCat("weights for node '", graph.id(d),
                                    "' have ", w.size(), " entries"));
    }
    for (int k = 1; k < q; ++k) {
      if (w[k] > w[k - 1]) {
        return MakeError(ErrorKind::kNonMonotoneWeights,
                         absl::StrCat("weights for node '", graph.id(d),
                                      "' increase at rank ", k + 1, ": (",
                                      absl::StrJoin(w, ","), ")"));
      }
    }
    const SimplexVector preferred =
        mechanism.Find(graph.id(d))->ToPreferenceOrder(graph.preference(d));
    for (int k = 0; k < q; ++k) total += w[k] * preferred[k];
  }
  return total;
}

}  // namespace rainbow_dp
