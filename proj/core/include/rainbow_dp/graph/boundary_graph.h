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

#ifndef RAINBOW_DP_GRAPH_BOUNDARY_GRAPH_H_
#define RAINBOW_DP_GRAPH_BOUNDARY_GRAPH_H_

#include <map>
#include <string>

#include "absl/status/statusor.h"
#include "rainbow_dp/graph/morphism.h"
#include "rainbow_dp/graph/rainbow_graph.h"

namespace rainbow_dp {

// The boundary rainbow graph: for each rainbow c a chain (c,0)~...~(c,d_c),
// plus head edges (c,0)~(c',0) wherever B^c and B^c' touch, together with
// the boundary morphism d -> (f(d), dist(d, ∂B^f(d))).
struct BoundaryGraph {
  std::map<Rainbow, int> depths;
  // morphism.codomain is the boundary graph itself.
  Morphism morphism;

  const RainbowGraph& graph() const { return morphism.codomain; }
};

// Identifier of chain node (rainbow, depth), e.g. "blue:red:green@2".
std::string BoundaryNodeId(const ColorSpace& space, const Rainbow& rainbow,
                           int depth);

// Propagates UnconstrainedRegion from BoundaryDistances.
absl::StatusOr<BoundaryGraph> BuildBoundaryGraph(const RainbowGraph& graph);

}  // namespace rainbow_dp

#endif  // RAINBOW_DP_GRAPH_BOUNDARY_GRAPH_H_
