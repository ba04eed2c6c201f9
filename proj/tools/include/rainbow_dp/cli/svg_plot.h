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

#ifndef RAINBOW_DP_CLI_SVG_PLOT_H_
#define RAINBOW_DP_CLI_SVG_PLOT_H_

#include <optional>
#include <string>

#include "rainbow_dp/mechanism/t_operator.h"

namespace rainbow_dp {

// Standalone 800x500 SVG: one polyline of p against t per preference rank,
// a legend, and a dashed vertical marker at every finite tau inside the
// plotted range when `tau` is given.
std::string RenderTrajectorySvg(const TrajectoryTable& table,
                                const std::optional<TauProfile>& tau);

}  // namespace rainbow_dp

#endif  // RAINBOW_DP_CLI_SVG_PLOT_H_
