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

#ifndef RAINBOW_DP_GRAPH_MORPHISM_H_
#define RAINBOW_DP_GRAPH_MORPHISM_H_

#include <map>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "rainbow_dp/graph/rainbow_graph.h"
#include "rainbow_dp/mechanism/mechanism.h"

namespace rainbow_dp {

// A map of domain nodes to codomain nodes. Whether it is a graph morphism
// is a property checked by CheckMorphism, not a construction invariant.
struct Morphism {
  RainbowGraph domain;
  RainbowGraph codomain;
  // map[d] is the codomain index of domain node d.
  std::vector<int> map;

  // `assignment` must name every domain node exactly once and only codomain
  // nodes as targets.
  static absl::StatusOr<Morphism> Create(
      RainbowGraph domain, RainbowGraph codomain,
      const std::map<std::string, std::string>& assignment);
};

struct MorphismViolation {
  enum class Kind {
    // Adjacent domain nodes mapped to distinct, non-adjacent nodes.
    kEdge,
    // f_domain(node) != f_codomain(map(node)); `second` is empty.
    kRainbow,
  };
  Kind kind;
  std::string first;
  std::string second;
};

struct MorphismReport {
  bool is_morphism = true;
  bool is_rainbow_preserving = true;
  std::vector<MorphismViolation> violations;
};

MorphismReport CheckMorphism(const Morphism& morphism);

// M_domain = M_codomain ∘ map. Fails with MissingNode when an image node has
// no distribution.
absl::StatusOr<Mechanism> Pullback(const Mechanism& codomain_mechanism,
                                   const Morphism& morphism);

}  // namespace rainbow_dp

#endif  // RAINBOW_DP_GRAPH_MORPHISM_H_
