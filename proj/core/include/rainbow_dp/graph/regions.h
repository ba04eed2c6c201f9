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

#ifndef RAINBOW_DP_GRAPH_REGIONS_H_
#define RAINBOW_DP_GRAPH_REGIONS_H_

#include <vector>

#include "absl/status/statusor.h"
#include "rainbow_dp/graph/rainbow_graph.h"

namespace rainbow_dp {

// B^c for one rainbow c, split into interior (every neighbor shares c) and
// boundary. Node index lists are sorted.
struct Region {
  Rainbow rainbow;
  std::vector<int> members;
  std::vector<int> interior;
  std::vector<int> boundary;
};

struct RegionDecomposition {
  // One entry per rainbow occurring in the graph, ordered by rainbow.
  std::vector<Region> regions;

  const Region* Find(const Rainbow& rainbow) const;
};

RegionDecomposition DecomposeRegions(const RainbowGraph& graph);

// Shortest-path distance (in the whole graph) from each node to the boundary
// of its own region, indexed by node. Fails with UnconstrainedRegion when a
// node cannot reach any boundary node of its region, which covers regions
// with empty boundary and region components cut off from the boundary.
absl::StatusOr<std::vector<int>> BoundaryDistances(
    const RainbowGraph& graph, const RegionDecomposition& regions);

}  // namespace rainbow_dp

#endif  // RAINBOW_DP_GRAPH_REGIONS_H_
