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

#include "rainbow_dp/oracle/rng.h"

#include <cassert>
#include <cmath>
#include <limits>

namespace rainbow_dp {

double Rng::Uniform01() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

double Rng::Uniform(double lo, double hi) {
  return lo + (hi - lo) * Uniform01();
}

int64_t Rng::UniformInt(int64_t lo, int64_t hi) {
  assert(lo <= hi);
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<int64_t>(Next());
  // Rejection keeps the draw exactly uniform.
  const uint64_t limit =
      std::numeric_limits<uint64_t>::max() -
      std::numeric_limits<uint64_t>::max() % span;
  uint64_t x;
  do {
    x = Next();
  } while (x >= limit);
  return lo + static_cast<int64_t>(x % span);
}

uint64_t SubSeed(uint64_t seed, uint64_t index) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SimplexVector UniformSimplex(Rng& rng, int q) {
  return UniformSimplexOnSupport(rng, std::vector<bool>(q, true));
}

SimplexVector UniformSimplexOnSupport(Rng& rng,
                                      const std::vector<bool>& support) {
  std::vector<double> x(support.size(), 0.0);
  double total = 0.0;
  for (size_t i = 0; i < support.size(); ++i) {
    if (!support[i]) continue;
    // Normalized exponentials are uniform on the simplex.
    x[i] = -std::log1p(-rng.Uniform01());
    total += x[i];
  }
  if (total <= 0.0) {
    // All draws were zero (probability ~2^-53 per entry); fall back to the
    // first supported vertex.
    for (size_t i = 0; i < support.size(); ++i) {
      if (support[i]) {
        x[i] = 1.0;
        total = 1.0;
        break;
      }
    }
  }
  for (double& v : x) v /= total;
  absl::StatusOr<SimplexVector> p = SimplexVector::Create(std::move(x));
  assert(p.ok());
  return *std::move(p);
}

}  // namespace rainbow_dp
