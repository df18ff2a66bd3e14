// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "smk/unsubmax/unsub_max.h"

#include <gtest/gtest.h>

#include "smk/baselines/baselines.h"
#include "smk/objectives/generators.h"
#include "smk/objectives/objectives.h"
#include "testing/fixtures.h"

namespace smk {
namespace {

TEST(UnSubMaxTest, EmptyGround) {
  const ModularObjective f({1.0, 2.0});
  CountingOracle oracle(f);
  std::mt19937_64 rng(0);
  const UnSubMaxResult r = UnSubMax(oracle, ElementSet{}, 5, rng);
  EXPECT_TRUE(r.set.empty());
  EXPECT_EQ(r.value, 0.0);
}

TEST(UnSubMaxTest, ModularReturnsGround) {
  const ModularObjective f = testing::Modular321();
  CountingOracle oracle(f);
  std::mt19937_64 rng(3);
  const UnSubMaxResult r = UnSubMax(oracle, ElementSet{0, 1, 2}, 10, rng);
  EXPECT_TRUE(r.set.SameMembers(ElementSet{0, 1, 2}));
  EXPECT_EQ(r.value, 6.0);
}

TEST(UnSubMaxTest, OneRoundPerCall) {
  const CutObjective f(testing::UnitTriangle());
  CountingOracle oracle(f);
  std::mt19937_64 rng(4);
  UnSubMax(oracle, ElementSet{0, 1, 2}, 7, rng);
  EXPECT_EQ(oracle.ledger(), (QueryLedger{9, 1}));
}

TEST(UnSubMaxTest, ResultIsFromGroundAndBeatsEmpty) {
  const RandomGraph g = GenerateErdosRenyi(16, 0.4, 6);
  const CutObjective f(g.graph);
  std::mt19937_64 rng(5);
  const ElementSet ground{1, 3, 5, 7, 9, 11};
  for (int t = 0; t < 30; ++t) {
    CountingOracle oracle(f);
    const UnSubMaxResult r = UnSubMax(oracle, ground, 10, rng);
    EXPECT_TRUE(IsSubset(r.set, ground));
    EXPECT_GE(r.value, 0.0);
    EXPECT_EQ(r.value, f.Value(r.set));
  }
}

TEST(UnSubMaxTest, QuarterOfUnconstrainedOptimumOnAverage) {
  const RandomGraph g = GenerateErdosRenyi(12, 0.5, 17);
  const CutObjective f(g.graph);
  const double opt = BruteForceUnconstrained(f).value;
  ElementSet ground;
  for (ElementId e = 0; e < 12; ++e) ground.Insert(e);
  double sum = 0.0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    CountingOracle oracle(f);
    std::mt19937_64 rng(seed);
    sum += UnSubMax(oracle, ground, 10, rng).value;
  }
  EXPECT_GE(sum / 200.0, 0.25 * opt);
}

}  // namespace
}  // namespace smk
