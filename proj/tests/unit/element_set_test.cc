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

#include "smk/core/element_set.h"

#include <gtest/gtest.h>

#include <cmath>

#include "smk/core/errors.h"
#include "smk/core/knapsack_instance.h"

namespace smk {
namespace {

TEST(ElementSetTest, KeepsInsertionOrderAndRejectsDuplicates) {
  ElementSet s;
  EXPECT_TRUE(s.Insert(4));
  EXPECT_TRUE(s.Insert(1));
  EXPECT_FALSE(s.Insert(4));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], 4u);
  EXPECT_EQ(s[1], 1u);
  EXPECT_TRUE(s.Contains(1));
  EXPECT_FALSE(s.Contains(2));
  EXPECT_FALSE(s.Contains(1000));
  EXPECT_EQ(s.Sorted(), (std::vector<ElementId>{1, 4}));
  EXPECT_EQ(s.Extent(), 5u);
}

TEST(ElementSetTest, PrefixAndEquality) {
  const ElementSet s{3, 0, 2};
  EXPECT_EQ(s.Prefix(2), (ElementSet{3, 0}));
  EXPECT_TRUE(s.SameMembers(ElementSet{0, 2, 3}));
  EXPECT_FALSE(s == (ElementSet{0, 2, 3}));
  EXPECT_TRUE(ElementSet{}.empty());
  EXPECT_EQ(ElementSet{}.Extent(), 0u);
}

TEST(ElementSetTest, SetAlgebra) {
  const ElementSet a{0, 1, 2};
  const ElementSet b{2, 3};
  EXPECT_EQ(Union(a, b), (ElementSet{0, 1, 2, 3}));
  EXPECT_EQ(Difference(a, b), (ElementSet{0, 1}));
  EXPECT_FALSE(Disjoint(a, b));
  EXPECT_TRUE(Disjoint(a, ElementSet{5}));
  EXPECT_TRUE(IsSubset(ElementSet{1, 0}, a));
  EXPECT_FALSE(IsSubset(b, a));
}

TEST(KnapsackInstanceTest, FeasibilityExamples) {
  EXPECT_TRUE(KnapsackInstance({1.0, 1.0, 1.0}, 2.0).Feasible(ElementSet{}));
  EXPECT_FALSE(KnapsackInstance({1.0, 1.0, 1.0}, 2.0).Feasible(ElementSet{0, 1, 2}));
  // 0.5 + 0.6 rounds to exactly 1.1 and the bound is inclusive.
  EXPECT_TRUE(KnapsackInstance({0.5, 0.6}, 1.1).Feasible(ElementSet{0, 1}));
}

TEST(KnapsackInstanceTest, RejectsBadInput) {
  EXPECT_THROW(KnapsackInstance({1.0, 0.0}, 1.0), DomainError);
  EXPECT_THROW(KnapsackInstance({1.0, -2.0}, 1.0), DomainError);
  EXPECT_THROW(KnapsackInstance({1.0, std::nan("")}, 1.0), DomainError);
  EXPECT_THROW(KnapsackInstance({1.0}, 0.0), DomainError);
  EXPECT_THROW(KnapsackInstance({1.0}, 1.0).Feasible(ElementSet{1}), DomainError);
}

TEST(KnapsackInstanceTest, CostIsOrderIndependent) {
  const KnapsackInstance inst({0.1, 0.2, 0.3, 1e-17}, 1.0);
  EXPECT_EQ(inst.Cost(ElementSet{0, 1, 2, 3}), inst.Cost(ElementSet{3, 2, 1, 0}));
  EXPECT_DOUBLE_EQ(inst.TotalCost(), 0.6);
}

TEST(KnapsackInstanceTest, FitsBudgetAgreesWithFeasibleNearBoundary) {
  const KnapsackInstance inst({0.1, 0.2, 0.3, 0.4}, 1.0);
  // Summed in this order the running total is 1.0000000000000002, one ulp
  // over; the canonical ascending sum decides.
  double running = 0.0;
  for (double c : {0.3, 0.4, 0.2, 0.1}) running += c;
  const std::vector<ElementId> ids{2, 3, 1, 0};
  EXPECT_EQ(inst.FitsBudget(running, 4, [&] { return ids; }),
            inst.Feasible(ElementSet{2, 3, 1, 0}));
  EXPECT_TRUE(inst.FitsBudget(0.5, 2, [] { return std::vector<ElementId>{}; }));
  EXPECT_FALSE(inst.FitsBudget(1.5, 2, [] { return std::vector<ElementId>{}; }));
}

TEST(KnapsackInstanceTest, MaxFeasibleCardinality) {
  EXPECT_EQ(KnapsackInstance({0.5, 0.2, 0.9, 0.3}, 1.0).MaxFeasibleCardinality(), 3u);
  EXPECT_EQ(KnapsackInstance({2.0}, 1.0).MaxFeasibleCardinality(), 0u);
}

}  // namespace
}  // namespace smk
