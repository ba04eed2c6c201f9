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

#include "rainbow_dp/mechanism/optimal.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <set>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "rainbow_dp/core/errors.h"
#include "rainbow_dp/core/predicates.h"
#include "rainbow_dp/graph/regions.h"
#include "rainbow_dp/mechanism/t_operator.h"

namespace rainbow_dp {
namespace {

SimplexVector ClosedFormAt(const SimplexVector& m, const PrivacyBudget& budget,
                           int distance) {
  const std::vector<double> s =
      ClosedFormPrefix(m, budget, static_cast<double>(distance));
  absl::StatusOr<SimplexVector> p = SimplexVector::FromPrefixSums(s);
  assert(p.ok());
  return *std::move(p);
}

#ifndef NDEBUG
bool AgreesWithIteration(const SimplexVector& previous,
                         const SimplexVector& next,
                         const PrivacyBudget& budget) {
  const std::vector<double> a = PrefixSums(TStep(previous, budget));
  const std::vector<double> b = PrefixSums(next);
  for (size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k] - b[k]) > 1e-9) return false;
  }
  return true;
}
#endif

// Worst excess of the hockey-stick divergence over delta, both directions.
double ClosenessMargin(const SimplexVector& a, const SimplexVector& b,
                       const PrivacyBudget& budget) {
  const double e = budget.exp_epsilon();
  return std::max(*HockeyStickDivergence(a, b, e),
                  *HockeyStickDivergence(b, a, e)) -
         budget.delta();
}

}  // namespace

std::vector<SimplexVector> LineDistributions(const SimplexVector& m,
                                             const PrivacyBudget& budget,
                                             int n) {
  std::vector<SimplexVector> out;
  out.reserve(n + 1);
  out.push_back(m);
  for (int i = 1; i <= n; ++i) {
    out.push_back(ClosedFormAt(m, budget, i));
    assert(AgreesWithIteration(out[i - 1], out[i], budget));
  }
  return out;
}

absl::StatusOr<RainbowGraph> MakeLineGraph(const ColorSpace& space,
                                           const Rainbow& rainbow, int n) {
  std::vector<NodeSpec> nodes;
  std::vector<EdgeSpec> edges;
  for (int i = 0; i <= n; ++i) {
    nodes.push_back({absl::StrCat(i), rainbow});
    if (i > 0) edges.emplace_back(absl::StrCat(i - 1), absl::StrCat(i));
  }
  return RainbowGraph::Create(space, std::move(nodes), std::move(edges));
}

Mechanism LineMechanism(const SimplexVector& m, const PrivacyBudget& budget,
                        int n) {
  Mechanism out(ColorSpace::Numbered(m.size()));
  std::vector<SimplexVector> line = LineDistributions(m, budget, n);
  for (int i = 0; i <= n; ++i) {
    absl::Status s = out.Set(absl::StrCat(i), std::move(line[i]));
    assert(s.ok());
    (void)s;
  }
  return out;
}

absl::StatusOr<BoundaryReport> ValidateBoundaryCondition(
    const RainbowGraph& graph, const BoundaryCondition& bc,
    const PrivacyBudget& budget) {
  const ColorSpace& space = graph.color_space();
  const RegionDecomposition regions = DecomposeRegions(graph);
  for (const Region& region : regions.regions) {
    if (region.boundary.empty()) continue;
    const SimplexVector* m = bc.Find(region.rainbow);
    if (m == nullptr) {
      return MakeError(ErrorKind::kMissingRainbow,
                       absl::StrCat("no boundary vector for rainbow (",
                                    region.rainbow.ToString(space), ")"));
    }
    if (m->size() != space.size()) {
      return MakeError(ErrorKind::kLengthMismatch,
                       absl::StrCat("boundary vector for rainbow (",
                                    region.rainbow.ToString(space),
                                    ") has wrong length"));
    }
  }

  // Touching region pairs are exactly the head edges of the boundary graph.
  std::set<std::pair<Rainbow, Rainbow>> pairs;
  for (const auto& [a, b] : graph.edges()) {
    const Rainbow& ca = graph.preference(a);
    const Rainbow& cb = graph.preference(b);
    if (ca != cb) pairs.insert(std::minmax(ca, cb));
  }
  BoundaryReport report;
  for (const auto& [ca, cb] : pairs) {
    const SimplexVector& ma = *bc.Find(ca);
    const SimplexVector& mb = *bc.Find(cb);
    if (!*IsClose(ma, mb, budget)) {
      report.valid = false;
      report.violations.push_back({ca, cb, ClosenessMargin(ma, mb, budget)});
    }
  }
  return report;
}

absl::StatusOr<Mechanism> OptimalMechanism(const RainbowGraph& graph,
                                           const BoundaryCondition& bc,
                                           const PrivacyBudget& budget) {
  const ColorSpace& space = graph.color_space();
  absl::StatusOr<BoundaryReport> report =
      ValidateBoundaryCondition(graph, bc, budget);
  if (!report.ok()) return report.status();
  if (!report->valid) {
    std::vector<std::string> pairs;
    for (const BoundaryViolation& v : report->violations) {
      pairs.push_back(absl::StrCat("(", v.first.ToString(space), ") vs (",
                                   v.second.ToString(space), ") by ",
                                   v.margin));
    }
    return MakeError(ErrorKind::kInvalidBoundary,
                     absl::StrCat("boundary vectors not close: ",
                                  absl::StrJoin(pairs, "; ")));
  }

  const RegionDecomposition regions = DecomposeRegions(graph);
  absl::StatusOr<std::vector<int>> dist = BoundaryDistances(graph, regions);
  if (!dist.ok()) return dist.status();

  Mechanism out(space);
  for (const Region& region : regions.regions) {
    const Rainbow& c = region.rainbow;
    const SimplexVector preferred = bc.Find(c)->ToPreferenceOrder(c);
    int depth = 0;
    for (int d : region.members) depth = std::max(depth, (*dist)[d]);
    const std::vector<SimplexVector> line =
        LineDistributions(preferred, budget, depth);
    for (int d : region.members) {
      absl::Status s =
          out.Set(graph.id(d), line[(*dist)[d]].ToCanonicalOrder(c));
      if (!s.ok()) return s;
    }
  }
  return out;
}

absl::StatusOr<Mechanism> BoundaryGraphMechanism(const BoundaryGraph& boundary,
                                                 const BoundaryCondition& bc,
                                                 const PrivacyBudget& budget) {
  const ColorSpace& space = boundary.graph().color_space();
  Mechanism out(space);
  for (const auto& [c, depth] : boundary.depths) {
    const SimplexVector* m = bc.Find(c);
    if (m == nullptr) {
      return MakeError(ErrorKind::kMissingRainbow,
                       absl::StrCat("no boundary vector for rainbow (",
                                    c.ToString(space), ")"));
    }
    SimplexVector current = m->ToPreferenceOrder(c);
    for (int i = 0; i <= depth; ++i) {
      if (i > 0) current = TStep(current, budget);
      absl::Status s = out.Set(BoundaryNodeId(space, c, i),
                               current.ToCanonicalOrder(c));
      if (!s.ok()) return s;
    }
  }
  return out;
}

}  // namespace rainbow_dp
