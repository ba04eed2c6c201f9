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

#ifndef RAINBOW_DP_CLI_CSV_H_
#define RAINBOW_DP_CLI_CSV_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "rainbow_dp/core/color_space.h"
#include "rainbow_dp/graph/rainbow_graph.h"
#include "rainbow_dp/mechanism/mechanism.h"
#include "rainbow_dp/mechanism/t_operator.h"

namespace rainbow_dp {

// 12 significant digits, shortest form ("%.12g").
std::string FormatNumber(double x);

// Header `node,<c1>,...,<cq>`, one row per node in graph order.
std::string WriteMechanismCsv(const RainbowGraph& graph,
                              const Mechanism& mechanism);
// Rows for every node of the mechanism, in id order.
std::string WriteMechanismCsv(const Mechanism& mechanism);

// Columns are matched to `space` by name. Short rows fail with MissingNode
// (the file is incomplete); other defects fail with InvalidInput.
absl::StatusOr<Mechanism> ParseMechanismCsv(std::string_view text,
                                            const ColorSpace& space);

// Header `t,k,color,p,s`.
std::string WriteTrajectoryCsv(const TrajectoryTable& table);
absl::StatusOr<TrajectoryTable> ParseTrajectoryCsv(std::string_view text);

}  // namespace rainbow_dp

#endif  // RAINBOW_DP_CLI_CSV_H_
