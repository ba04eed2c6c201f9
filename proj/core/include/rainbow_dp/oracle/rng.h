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

#ifndef RAINBOW_DP_ORACLE_RNG_H_
#define RAINBOW_DP_ORACLE_RNG_H_

#include <cstdint>
#include <random>
#include <vector>

#include "rainbow_dp/core/simplex_vector.h"

namespace rainbow_dp {

// Seeded 64-bit generator with a portable output sequence: mt19937_64 is
// fully specified by the standard, and the conversions below avoid the
// implementation-defined std:: distributions.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }
  // Uniform on [0, 1) with 53 bits of precision.
  double Uniform01();
  // Uniform on [lo, hi).
  double Uniform(double lo, double hi);
  // Uniform integer on [lo, hi], both inclusive.
  int64_t UniformInt(int64_t lo, int64_t hi);
  bool Bernoulli(double p) { return Uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

// Order-independent child seed for (seed, index), via splitmix64.
uint64_t SubSeed(uint64_t seed, uint64_t index);

// Uniform draw from the simplex over q entries.
SimplexVector UniformSimplex(Rng& rng, int q);

// Uniform draw from the face of the simplex spanned by `support`, which must
// contain at least one true entry.
SimplexVector UniformSimplexOnSupport(Rng& rng, const std::vector<bool>& support);

}  // namespace rainbow_dp

#endif  // RAINBOW_DP_ORACLE_RNG_H_
