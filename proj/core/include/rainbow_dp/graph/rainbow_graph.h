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

#ifndef RAINBOW_DP_GRAPH_RAINBOW_GRAPH_H_
#define RAINBOW_DP_GRAPH_RAINBOW_GRAPH_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "rainbow_dp/core/color_space.h"
#include "rainbow_dp/core/rainbow.h"

namespace rainbow_dp {

struct NodeSpec {
  std::string id;
  Rainbow preference;
};

using EdgeSpec = std::pair<std::string, std::string>;

// Datasets, an undirected neighbor relation, and a preference rainbow per
// dataset. Nodes are kept sorted by identifier, so node indices follow
// lexicographic id order. Immutable once built.
class RainbowGraph {
 public:
  // Rejects duplicate nodes, self-loops, duplicate edges, dangling endpoints
  // and rainbows whose length differs from the color space.
  static absl::StatusOr<RainbowGraph> Create(ColorSpace space,
                                             std::vector<NodeSpec> nodes,
                                             std::vector<EdgeSpec> edges);

  const ColorSpace& color_space() const { return space_; }
  int num_nodes() const { return static_cast<int>(ids_.size()); }
  const std::string& id(int node) const { return ids_[node]; }
  const std::vector<std::string>& ids() const { return ids_; }
  const Rainbow& preference(int node) const { return preferences_[node]; }
  const std::vector<int>& neighbors(int node) const { return adjacency_[node]; }
  // Each edge once, as (a, b) with a < b, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  std::optional<int> IndexOf(std::string_view id) const;
  bool Adjacent(int a, int b) const;

 private:
  RainbowGraph(ColorSpace space) : space_(std::move(space)) {}

  ColorSpace space_;
  std::vector<std::string> ids_;
  std::vector<Rainbow> preferences_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace rainbow_dp

#endif  // RAINBOW_DP_GRAPH_RAINBOW_GRAPH_H_
