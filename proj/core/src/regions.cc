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

#include "rainbow_dp/graph/regions.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "absl/strings/str_cat.h"
#include "rainbow_dp/core/errors.h"

namespace rainbow_dp {

const Region* RegionDecomposition::Find(const Rainbow& rainbow) const {
  auto it = std::lower_bound(
      regions.begin(), regions.end(), rainbow,
      [](const Region& r, const Rainbow& c) { return r.rainbow < c; });
  if (it == regions.end() || it->rainbow != rainbow) return nullptr;
  return &*it;
}

RegionDecomposition DecomposeRegions(const RainbowGraph& graph) {
  std::map<Rainbow, Region> by_rainbow;
  for (int d = 0; d < graph.num_nodes(); ++d) {
    const Rainbow& c = graph.preference(d);
    auto [it, inserted] = by_rainbow.try_emplace(c, Region{c, {}, {}, {}});
    Region& region = it->second;
    region.members.push_back(d);
    const std::vector<int>& adj = graph.neighbors(d);
    const bool interior = std::all_of(adj.begin(), adj.end(), [&](int n) {
      return graph.preference(n) == c;
    });
    (interior ? region.interior : region.boundary).push_back(d);
  }
  RegionDecomposition out;
  out.regions.reserve(by_rainbow.size());
  for (auto& [c, region] : by_rainbow) out.regions.push_back(std::move(region));
  return out;
}

absl::StatusOr<std::vector<int>> BoundaryDistances(
    const RainbowGraph& graph, const RegionDecomposition& regions) {
  constexpr int kUnreached = std::numeric_limits<int>::max();
  std::vector<int> result(graph.num_nodes(), kUnreached);
  std::vector<int> dist(graph.num_nodes());
  for (const Region& region : regions.regions) {
    // Multi-source BFS from ∂B^c over the full graph.
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::deque<int> frontier;
    for (int b : region.boundary) {
      dist[b] = 0;
      frontier.push_back(b);
    }
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop_front();
      for (int v : graph.neighbors(u)) {
        if (dist[v] == kUnreached) {
          dist[v] = dist[u] + 1;
          frontier.push_back(v);
        }
      }
    }
    for (int d : region.members) {
      if (dist[d] == kUnreached) {
        return MakeError(
            ErrorKind::kUnconstrainedRegion,
            absl::StrCat("node '", graph.id(d), "' with rainbow (",
                         region.rainbow.ToString(graph.color_space()),
                         ") cannot reach the boundary of its region"));
      }
      result[d] = dist[d];
    }
  }
  return result;
}

}  // namespace rainbow_dp
