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

#include "rainbow_dp/graph/rainbow_graph.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "absl/strings/str_cat.h"
#include "rainbow_dp/core/errors.h"

namespace rainbow_dp {

absl::StatusOr<RainbowGraph> RainbowGraph::Create(ColorSpace space,
                                                  std::vector<NodeSpec> nodes,
                                                  std::vector<EdgeSpec> edges) {
  std::sort(nodes.begin(), nodes.end(),
            [](const NodeSpec& a, const NodeSpec& b) { return a.id < b.id; });
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].id.empty()) {
      return MakeError(ErrorKind::kInvalidInput, "empty node identifier");
    }
    if (i > 0 && nodes[i].id == nodes[i - 1].id) {
      return MakeError(ErrorKind::kInvalidInput,
                       absl::StrCat("duplicate node '", nodes[i].id, "'"));
    }
    if (nodes[i].preference.size() != space.size()) {
      return MakeError(ErrorKind::kLengthMismatch,
                       absl::StrCat("node '", nodes[i].id, "' has a rainbow of ",
                                    nodes[i].preference.size(), " colors"));
    }
  }

  RainbowGraph graph(std::move(space));
  graph.ids_.reserve(nodes.size());
  graph.preferences_.reserve(nodes.size());
  for (NodeSpec& n : nodes) {
    graph.ids_.push_back(std::move(n.id));
    graph.preferences_.push_back(std::move(n.preference));
  }
  graph.adjacency_.resize(graph.ids_.size());

  std::set<std::pair<int, int>> seen;
  for (const auto& [a_id, b_id] : edges) {
    std::optional<int> a = graph.IndexOf(a_id);
    std::optional<int> b = graph.IndexOf(b_id);
    if (!a.has_value() || !b.has_value()) {
      return MakeError(ErrorKind::kInvalidInput,
                       absl::StrCat("edge ", a_id, " ", b_id,
                                    " references undeclared node '",
                                    a.has_value() ? b_id : a_id, "'"));
    }
    if (*a == *b) {
      return MakeError(ErrorKind::kInvalidInput,
                       absl::StrCat("self-loop on node '", a_id, "'"));
    }
    std::pair<int, int> key = std::minmax(*a, *b);
    if (!seen.insert(key).second) {
      return MakeError(ErrorKind::kInvalidInput,
                       absl::StrCat("duplicate edge ", a_id, " ", b_id));
    }
  }
  graph.edges_.assign(seen.begin(), seen.end());
  for (const auto& [a, b] : graph.edges_) {
    graph.adjacency_[a].push_back(b);
    graph.adjacency_[b].push_back(a);
  }
  for (auto& adj : graph.adjacency_) std::sort(adj.begin(), adj.end());
  return graph;
}

std::optional<int> RainbowGraph::IndexOf(std::string_view id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<int>(it - ids_.begin());
}

bool RainbowGraph::Adjacent(int a, int b) const {
  const std::vector<int>& adj = adjacency_[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

}  // namespace rainbow_dp
