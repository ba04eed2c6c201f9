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

#include <cmath>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "rainbow_dp/core/color_space.h"
#include "rainbow_dp/core/errors.h"
#include "rainbow_dp/core/predicates.h"
#include "rainbow_dp/core/privacy_budget.h"
#include "rainbow_dp/core/rainbow.h"
#include "rainbow_dp/core/simplex_vector.h"
#include "rainbow_dp/oracle/brute_force.h"
#include "rainbow_dp/oracle/rng.h"
#include "test_support.h"

namespace rainbow_dp {
namespace {

using ::rainbow_dp::testing::Budget;
using ::rainbow_dp::testing::Mix;
using ::rainbow_dp::testing::PushForward;
using ::rainbow_dp::testing::RandomBudget;
using ::rainbow_dp::testing::Rb;
using ::rainbow_dp::testing::Vec;
using ::testing::ElementsAre;
using ::testing::DoubleNear;
using ::testing::HasSubstr;

std::vector<double> Values(const SimplexVector& p) {
  return {p.values().begin(), p.values().end()};
}

TEST(ErrorsTest, KindRoundTripsThroughStatus) {
  absl::Status status = MakeError(ErrorKind::kUnconstrainedRegion, "region x");
  EXPECT_FALSE(status.ok());
  EXPECT_THAT(std::string(status.message()), HasSubstr("region x"));
  EXPECT_EQ(GetErrorKind(status), ErrorKind::kUnconstrainedRegion);
  EXPECT_EQ(GetErrorKind(absl::OkStatus()), std::nullopt);
  EXPECT_EQ(GetErrorKind(absl::InternalError("plain")), std::nullopt);
}

TEST(ColorSpaceTest, RejectsInvalidSpaces) {
  EXPECT_FALSE(ColorSpace::Create({"red"}).ok());
  EXPECT_FALSE(ColorSpace::Create({"red", "red"}).ok());
  EXPECT_FALSE(ColorSpace::Create({"red", ""}).ok());
  ASSERT_OK_AND_ASSIGN(ColorSpace space,
                       ColorSpace::Create({"blue", "red", "green"}));
  EXPECT_EQ(space.size(), 3);
  EXPECT_EQ(space.IndexOf("green"), 2);
  EXPECT_EQ(space.IndexOf("pink"), std::nullopt);
}

TEST(RainbowTest, RequiresPermutation) {
  EXPECT_FALSE(Rainbow::Create({0, 0, 1}).ok());
  EXPECT_FALSE(Rainbow::Create({0, 3, 1}).ok());
  EXPECT_FALSE(Rainbow::Create({}).ok());
  ASSERT_OK_AND_ASSIGN(Rainbow r, Rainbow::Create({1, 2, 0}));
  EXPECT_EQ(r[0], 1);
  EXPECT_EQ(r.RankOf(0), 2);
  EXPECT_EQ(r.ToString(ColorSpace::Numbered(3)), "2,3,1");
}

TEST(RainbowTest, FromNames) {
  ASSERT_OK_AND_ASSIGN(ColorSpace space, ColorSpace::Create({"b", "r", "g"}));
  std::vector<std::string> names = {"r", "b", "g"};
  ASSERT_OK_AND_ASSIGN(Rainbow r, Rainbow::FromNames(space, names));
  EXPECT_EQ(r, Rb({1, 0, 2}));
  std::vector<std::string> bad = {"r", "r", "g"};
  EXPECT_FALSE(Rainbow::FromNames(space, bad).ok());
  std::vector<std::string> unknown = {"r", "x", "g"};
  EXPECT_FALSE(Rainbow::FromNames(space, unknown).ok());
}

TEST(SimplexVectorTest, ValidatesEntries) {
  EXPECT_FALSE(SimplexVector::Create({0.5, 0.6}).ok());
  EXPECT_FALSE(SimplexVector::Create({-0.1, 1.1}).ok());
  EXPECT_FALSE(SimplexVector::Create({}).ok());
  EXPECT_FALSE(SimplexVector::Create({NAN, 1.0}).ok());
  ASSERT_OK_AND_ASSIGN(SimplexVector p, SimplexVector::Create({0.25, 0.75}));
  EXPECT_EQ(p[1], 0.75);
}

TEST(SimplexVectorTest, RenormalizesRoundedInput) {
  ASSERT_OK_AND_ASSIGN(SimplexVector m, SimplexVector::Create(
                                            {0.0005, 0.0081, 0.1364, 0.2727, 0.5822}));
  double sum = 0.0;
  for (double x : m.values()) sum += x;
  EXPECT_NEAR(sum, 1.0, 1e-9);
  EXPECT_NEAR(m[0], 0.0005 / 0.9999, 1e-15);
}

TEST(SimplexVectorTest, PermutationViewsAreInverse) {
  SimplexVector p = Vec({0.1, 0.2, 0.7});
  Rainbow c = Rb({2, 0, 1});
  SimplexVector pref = p.ToPreferenceOrder(c);
  EXPECT_THAT(Values(pref), ElementsAre(0.7, 0.1, 0.2));
  EXPECT_EQ(pref.ToCanonicalOrder(c), p);
}

TEST(PrivacyBudgetTest, ValidatesRanges) {
  EXPECT_FALSE(PrivacyBudget::Create(-0.1, 0.0).ok());
  EXPECT_FALSE(PrivacyBudget::Create(0.1, -0.1).ok());
  EXPECT_FALSE(PrivacyBudget::Create(0.1, 1.5).ok());
  EXPECT_FALSE(PrivacyBudget::FromExpEpsilon(0.5, 0.0).ok());
  ASSERT_OK_AND_ASSIGN(PrivacyBudget b, PrivacyBudget::FromExpEpsilon(2.0, 0.1));
  EXPECT_NEAR(b.epsilon(), std::log(2.0), 1e-15);
  EXPECT_EQ(b.exp_epsilon(), 2.0);
  EXPECT_EQ(b.delta(), 0.1);
}

TEST(PrefixSumsTest, Examples) {
  EXPECT_THAT(PrefixSums(Vec({1, 0, 0})), ElementsAre(1, 1, 1));
  EXPECT_THAT(PrefixSums(Vec({0.1, 0.2, 0.7})),
              ElementsAre(DoubleNear(0.1, 1e-15), DoubleNear(0.3, 1e-15), 1.0));
  EXPECT_THAT(PrefixSums(Vec({0.0005, 0.0081, 0.1364, 0.2727, 0.5822})),
              ElementsAre(DoubleNear(0.0005, 1e-4), DoubleNear(0.0086, 1e-4),
                          DoubleNear(0.1450, 1e-4), DoubleNear(0.4177, 1e-4),
                          DoubleNear(1.0, 1e-12)));
}

TEST(DominatesTest, Examples) {
  SimplexVector y = Vec({0.4, 0.4, 0.2});
  EXPECT_TRUE(*Dominates(Vec({1, 0, 0}), y));
  EXPECT_TRUE(*Dominates(Vec({0.5, 0.3, 0.2}), y));
  EXPECT_FALSE(*Dominates(Vec({0.5, 0.1, 0.4}), y));
  EXPECT_FALSE(*Dominates(y, Vec({0.5, 0.1, 0.4})));
  EXPECT_EQ(GetErrorKind(Dominates(Vec({0.5, 0.5}), y).status()),
            ErrorKind::kLengthMismatch);
}

TEST(LexPrecedesTest, Examples) {
  SimplexVector x = Vec({0.5, 0.1, 0.4});
  SimplexVector y = Vec({0.4, 0.4, 0.2});
  EXPECT_TRUE(*LexPrecedes(x, x));
  EXPECT_FALSE(*LexPrecedes(x, y));
  EXPECT_TRUE(*LexPrecedes(y, x));
  EXPECT_TRUE(*LexPrecedes(y, Vec({0.5, 0.3, 0.2})));
  EXPECT_TRUE(*Dominates(Vec({0.5, 0.3, 0.2}), y));
  EXPECT_FALSE(LexPrecedes(Vec({0.5, 0.5}), y).ok());
}

TEST(IsCloseTest, Examples) {
  PrivacyBudget b = Budget(2.0, 0.0);
  SimplexVector p = Vec({0.2, 0.1, 0.7});
  EXPECT_TRUE(*IsClose(p, p, Budget(1.0, 0.0)));
  EXPECT_TRUE(*IsClose(p, Vec({0.4, 0.2, 0.4}), b));
  EXPECT_FALSE(*IsClose(Vec({0.4, 0.2, 0.4}), Vec({0.7, 0.05, 0.25}), b));
  EXPECT_NEAR(*HockeyStickDivergence(Vec({0.4, 0.2, 0.4}),
                                     Vec({0.7, 0.05, 0.25}), 2.0),
              0.1, 1e-15);
  EXPECT_FALSE(IsClose(Vec({0.5, 0.5}), p, b).ok());
}

TEST(TvDistanceTest, Examples) {
  SimplexVector p = Vec({0.2, 0.1, 0.7});
  EXPECT_EQ(*TvDistance(p, p), 0.0);
  EXPECT_EQ(*TvDistance(Vec({1, 0}), Vec({0, 1})), 1.0);
  EXPECT_NEAR(*TvDistance(p, Vec({0.4, 0.1, 0.5})), 0.2, 1e-15);
  EXPECT_FALSE(TvDistance(Vec({0.5, 0.5}), p).ok());
}

class CorePropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(CorePropertyTest, PrefixSumsMonotoneAndNormalized) {
  Rng rng(SubSeed(1, GetParam()));
  SimplexVector p = UniformSimplex(rng, static_cast<int>(rng.UniformInt(2, 10)));
  std::vector<double> s = PrefixSums(p);
  for (size_t k = 1; k < s.size(); ++k) EXPECT_LE(s[k - 1], s[k]);
  EXPECT_NEAR(s.back(), 1.0, 1e-12);
}

TEST_P(CorePropertyTest, DominanceIsPartialOrder) {
  Rng rng(SubSeed(2, GetParam()));
  const int q = static_cast<int>(rng.UniformInt(2, 8));
  SimplexVector x = UniformSimplex(rng, q);
  SimplexVector y = PushForward(rng, x);
  SimplexVector z = PushForward(rng, y);
  EXPECT_TRUE(*Dominates(x, x));
  EXPECT_TRUE(*Dominates(y, x));
  EXPECT_TRUE(*Dominates(z, y));
  EXPECT_TRUE(*Dominates(z, x));
  if (*Dominates(x, y)) {
    EXPECT_LE(testing::MaxAbsDiff(PrefixSums(x), PrefixSums(y)), 1e-12);
  }
  SimplexVector u = UniformSimplex(rng, q);
  SimplexVector v = UniformSimplex(rng, q);
  SimplexVector w = UniformSimplex(rng, q);
  if (*Dominates(u, v) && *Dominates(v, w)) EXPECT_TRUE(*Dominates(u, w));
}

TEST_P(CorePropertyTest, DominanceImpliesLex) {
  Rng rng(SubSeed(3, GetParam()));
  const int q = static_cast<int>(rng.UniformInt(2, 8));
  SimplexVector x = UniformSimplex(rng, q);
  SimplexVector y = rng.Bernoulli(0.5) ? PushForward(rng, x) : UniformSimplex(rng, q);
  if (*Dominates(y, x)) EXPECT_TRUE(*LexPrecedes(x, y));
  if (*Dominates(x, y)) EXPECT_TRUE(*LexPrecedes(y, x));
}

TEST_P(CorePropertyTest, PureClosenessIsPerElement) {
  Rng rng(SubSeed(4, GetParam()));
  const int q = static_cast<int>(rng.UniformInt(2, 8));
  PrivacyBudget b = Budget(std::exp(rng.Uniform(0.01, 2.0)), 0.0);
  SimplexVector p = UniformSimplex(rng, q);
  SimplexVector r = Mix(p, UniformSimplex(rng, q), rng.Uniform01());
  bool per_element = true;
  for (int v = 0; v < q; ++v) {
    per_element = per_element && p[v] <= b.exp_epsilon() * r[v] + 1e-12 &&
                  r[v] <= b.exp_epsilon() * p[v] + 1e-12;
  }
  EXPECT_EQ(*IsClose(p, r, b), per_element);
}

TEST_P(CorePropertyTest, ClosenessMatchesSubsetEnumeration) {
  Rng rng(SubSeed(5, GetParam()));
  const int q = static_cast<int>(rng.UniformInt(2, 10));
  PrivacyBudget b = RandomBudget(rng, 0.3);
  SimplexVector p = UniformSimplex(rng, q);
  SimplexVector r = Mix(p, UniformSimplex(rng, q), rng.Uniform01());
  EXPECT_EQ(*IsClose(p, r, b), *IsCloseBruteForce(p, r, b));
}

TEST_P(CorePropertyTest, ClosenessMonotoneInBudget) {
  Rng rng(SubSeed(6, GetParam()));
  const int q = static_cast<int>(rng.UniformInt(2, 8));
  PrivacyBudget b = RandomBudget(rng);
  SimplexVector p = UniformSimplex(rng, q);
  SimplexVector r = Mix(p, UniformSimplex(rng, q), rng.Uniform01());
  if (!*IsClose(p, r, b)) return;
  EXPECT_TRUE(*IsClose(p, r, Budget(b.exp_epsilon() * 1.5, b.delta())));
  EXPECT_TRUE(*IsClose(p, r, Budget(b.exp_epsilon(), std::min(1.0, b.delta() + 0.05))));
}

TEST_P(CorePropertyTest, TvTriangleInequality) {
  Rng rng(SubSeed(7, GetParam()));
  const int q = static_cast<int>(rng.UniformInt(2, 10));
  SimplexVector a = UniformSimplex(rng, q);
  SimplexVector b = UniformSimplex(rng, q);
  SimplexVector c = UniformSimplex(rng, q);
  EXPECT_LE(*TvDistance(a, c), *TvDistance(a, b) + *TvDistance(b, c) + 1e-12);
  EXPECT_NEAR(*TvDistance(a, b), *TvDistance(b, a), 1e-15);
}

INSTANTIATE_TEST_SUITE_P(Random, CorePropertyTest, ::testing::Range(0, 200));

}  // namespace
}  // namespace rainbow_dp
