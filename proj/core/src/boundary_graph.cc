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

#include "rainbow_dp/graph/boundary_graph.h"

#include <algorithm>
#include <set>

#include "absl/strings/str_cat.h"
#include "rainbow_dp/graph/regions.h"

namespace rainbow_dp {

std::string BoundaryNodeId(const ColorSpace& space, const Rainbow& rainbow,
                           int depth) {
  return absl::StrCat(rainbow.ToString(space, ":"), "@", depth);
}

absl::StatusOr<BoundaryGraph> BuildBoundaryGraph(const RainbowGraph& graph) {
  const ColorSpace& space = graph.color_space();
  const RegionDecomposition regions = DecomposeRegions(graph);
  absl::StatusOr<std::vector<int>> dist = BoundaryDistances(graph, regions);
  if (!dist.ok()) return dist.status();

  std::map<Rainbow, int> depths;
  for (const Region& region : regions.regions) {
    int depth = 0;
    for (int d : region.members) depth = std::max(depth, (*dist)[d]);
    depths.emplace(region.rainbow, depth);
  }

  std::vector<NodeSpec> nodes;
  std::vector<EdgeSpec> edges;
  for (const auto& [c, depth] : depths) {
    for (int i = 0; i <= depth; ++i) {
      nodes.push_back({BoundaryNodeId(space, c, i), c});
      if (i > 0) {
        edges.emplace_back(BoundaryNodeId(space, c, i - 1),
                           BoundaryNodeId(space, c, i));
      }
    }
  }
  std::set<std::pair<Rainbow, Rainbow>> heads;
  for (const auto& [a, b] : graph.edges()) {
    const Rainbow& ca = graph.preference(a);
    const Rainbow& cb = graph.preference(b);
    if (ca != cb) heads.insert(std::minmax(ca, cb));
  }
  for (const auto& [ca, cb] : heads) {
    edges.emplace_back(BoundaryNodeId(space, ca, 0),
                       BoundaryNodeId(space, cb, 0));
  }

  absl::StatusOr<RainbowGraph> boundary =
      RainbowGraph::Create(space, std::move(nodes), std::move(edges));
  if (!boundary.ok()) return boundary.status();

  std::map<std::string, std::string> assignment;
  for (int d = 0; d < graph.num_nodes(); ++d) {
    assignment.emplace(graph.id(d),
                       BoundaryNodeId(space, graph.preference(d), (*dist)[d]));
  }
  absl::StatusOr<Morphism> morphism =
      Morphism::Create(graph, *std::move(boundary), assignment);
  if (!morphism.ok()) return morphism.status();
  return BoundaryGraph{std::move(depths), *std::move(morphism)};
}

}  // namespace rainbow_dp
