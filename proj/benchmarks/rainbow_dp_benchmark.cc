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

#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "rainbow_dp/core/predicates.h"
#include "rainbow_dp/graph/rainbow_graph.h"
#include "rainbow_dp/mechanism/optimal.h"
#include "rainbow_dp/mechanism/t_operator.h"
#include "rainbow_dp/oracle/brute_force.h"
#include "rainbow_dp/oracle/rng.h"

namespace rainbow_dp {
namespace {

PrivacyBudget DefaultBudget() { return *PrivacyBudget::FromExpEpsilon(2.0, 0.01); }

void BM_TStep(benchmark::State& state) {
  Rng rng(1);
  SimplexVector p = UniformSimplex(rng, static_cast<int>(state.range(0)));
  const PrivacyBudget budget = DefaultBudget();
  for (auto _ : state) benchmark::DoNotOptimize(TStep(p, budget));
}
BENCHMARK(BM_TStep)->Arg(3)->Arg(10)->Arg(100);

void BM_ClosedFormPrefix(benchmark::State& state) {
  Rng rng(2);
  SimplexVector p = UniformSimplex(rng, static_cast<int>(state.range(0)));
  const PrivacyBudget budget = DefaultBudget();
  for (auto _ : state) benchmark::DoNotOptimize(ClosedFormPrefix(p, budget, 37.0));
}
BENCHMARK(BM_ClosedFormPrefix)->Arg(3)->Arg(10)->Arg(100);

void BM_IsClose(benchmark::State& state) {
  Rng rng(3);
  const int q = static_cast<int>(state.range(0));
  SimplexVector p = UniformSimplex(rng, q);
  SimplexVector r = UniformSimplex(rng, q);
  const PrivacyBudget budget = DefaultBudget();
  for (auto _ : state) benchmark::DoNotOptimize(IsClose(p, r, budget));
}
BENCHMARK(BM_IsClose)->Arg(10);

void BM_IsCloseBruteForce(benchmark::State& state) {
  Rng rng(3);
  const int q = static_cast<int>(state.range(0));
  SimplexVector p = UniformSimplex(rng, q);
  SimplexVector r = UniformSimplex(rng, q);
  const PrivacyBudget budget = DefaultBudget();
  for (auto _ : state) benchmark::DoNotOptimize(IsCloseBruteForce(p, r, budget));
}
BENCHMARK(BM_IsCloseBruteForce)->Arg(10);

// Path of n nodes split into two rainbow halves.
void BM_OptimalMechanismPath(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int q = 5;
  const Rainbow a = Rainbow::Identity(q);
  const Rainbow b = *Rainbow::Create({4, 3, 2, 1, 0});
  std::vector<NodeSpec> nodes;
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < n; ++i) {
    nodes.push_back({"v" + std::to_string(i), i < n / 2 ? a : b});
    if (i > 0) edges.emplace_back("v" + std::to_string(i - 1), "v" + std::to_string(i));
  }
  const RainbowGraph graph = *RainbowGraph::Create(ColorSpace::Numbered(q), nodes, edges);
  BoundaryCondition bc;
  bc.Set(a, SimplexVector::Uniform(q));
  bc.Set(b, SimplexVector::Uniform(q));
  const PrivacyBudget budget = DefaultBudget();
  for (auto _ : state) benchmark::DoNotOptimize(OptimalMechanism(graph, bc, budget));
}
BENCHMARK(BM_OptimalMechanismPath)->Arg(100)->Arg(10000);

}  // namespace
}  // namespace rainbow_dp

BENCHMARK_MAIN();
