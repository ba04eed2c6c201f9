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

#ifndef RAINBOW_DP_CLI_GRAPH_FILE_H_
#define RAINBOW_DP_CLI_GRAPH_FILE_H_

#include <optional>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "rainbow_dp/graph/rainbow_graph.h"
#include "rainbow_dp/mechanism/mechanism.h"

namespace rainbow_dp {

// Line-oriented graph description:
//
//   colors <c1> ... <cq>                  first directive, exactly once
//   node <id> <r1> ... <rq>               rainbow, most preferred first
//   edge <idA> <idB>
//   boundary <r1>,...,<rq> <p1> ... <pq>  probabilities in canonical order
//
// '#' starts a comment; tokens are whitespace separated.
struct GraphFile {
  RainbowGraph graph;
  // Present when the text has at least one boundary line.
  std::optional<BoundaryCondition> boundary;
};

// Diagnostics carry the offending line number ("line 7: ...").
absl::StatusOr<GraphFile> ParseGraphFile(std::string_view text);

std::string EmitGraphFile(const GraphFile& file);

}  // namespace rainbow_dp

#endif  // RAINBOW_DP_CLI_GRAPH_FILE_H_
