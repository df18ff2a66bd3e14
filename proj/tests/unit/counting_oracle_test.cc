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

#include "smk/core/counting_oracle.h"

#include <gtest/gtest.h>

#include <random>

#include "smk/core/errors.h"
#include "smk/objectives/generators.h"
#include "smk/objectives/objectives.h"
#include "testing/fixtures.h"

namespace smk {
namespace {

TEST(CountingOracleTest, EvaluateChargesOneRoundOneQuery) {
  CutObjective cut(testing::UnitTriangle());
  CountingOracle oracle(cut);
  EXPECT_EQ(oracle.Evaluate(ElementSet{}), 0.0);
  EXPECT_EQ(oracle.Evaluate(ElementSet{0}), 2.0);
  EXPECT_EQ(oracle.ledger(), (QueryLedger{2, 2}));

  const ModularObjective modular = testing::Modular321();
  CountingOracle m(modular);
  EXPECT_EQ(m.Evaluate(ElementSet{0, 1}), 5.0);
}

TEST(CountingOracleTest, BatchCounting) {
  const ModularObjective f = testing::Modular321();
  CountingOracle oracle(f);
  std::vector<ElementSet> singletons;
  for (int i = 0; i < 7; ++i) singletons.push_back(ElementSet{static_cast<ElementId>(i % 3)});
  EXPECT_EQ(oracle.EvaluateBatch(singletons).size(), 7u);
  EXPECT_EQ(oracle.ledger(), (QueryLedger{7, 1}));

  const std::vector<ElementSet> empty_only{ElementSet{}};
  EXPECT_EQ(oracle.EvaluateBatch(empty_only), std::vector<double>{0.0});
  EXPECT_EQ(oracle.ledger(), (QueryLedger{8, 2}));

  std::vector<ElementSet> all;
  for (ElementSet s : {ElementSet{}, ElementSet{0}, ElementSet{1}, ElementSet{2},
                       ElementSet{0, 1}, ElementSet{0, 2}, ElementSet{1, 2},
                       ElementSet{0, 1, 2}}) {
    all.push_back(s);
  }
  EXPECT_EQ(oracle.EvaluateBatch(all),
            (std::vector<double>{0, 3, 2, 1, 5, 4, 3, 6}));
  EXPECT_EQ(oracle.ledger(), (QueryLedger{16, 3}));

  EXPECT_THROW(oracle.EvaluateBatch(std::vector<ElementSet>{}), ContractError);
  EXPECT_THROW(oracle.Evaluate(ElementSet{3}), DomainError);
}

TEST(CountingOracleTest, MarginalBatch) {
  const ModularObjective f = testing::Modular321();
  CountingOracle oracle(f);
  const std::vector<ElementId> cands{0, 1, 2};
  EXPECT_EQ(oracle.MarginalBatch(ElementSet{}, cands).gains,
            (std::vector<double>{3, 2, 1}));
  EXPECT_EQ(oracle.ledger(), (QueryLedger{4, 1}));
  const std::vector<ElementId> self{0};
  EXPECT_EQ(oracle.MarginalBatch(ElementSet{0}, self).gains, std::vector<double>{0});

  CutObjective cut(testing::UnitTriangle());
  CountingOracle c(cut);
  const std::vector<ElementId> one{1};
  const Marginals m = c.MarginalBatch(ElementSet{0}, one);
  EXPECT_EQ(m.base_value, 2.0);
  EXPECT_EQ(m.gains, std::vector<double>{0.0});
}

TEST(CountingOracleTest, SweepMatchesSequentialEvaluation) {
  RandomGraph g = GenerateErdosRenyi(20, 0.4, 3);
  const CutObjective f(std::move(g.graph));
  CountingOracle oracle(f);
  const ElementSet base{5, 7};
  const std::vector<ElementId> seq{1, 9, 3, 12};
  const std::vector<ElementId> cands{0, 2, 4, 9, 19};
  const PrefixSweep sweep = oracle.SweepPrefixes(base, seq, cands, 1);
  const std::size_t d = seq.size();
  EXPECT_EQ(oracle.ledger(), (QueryLedger{(d + 1) + d * cands.size(), 1}));
  for (std::size_t i = 0; i <= d; ++i) {
    ElementSet prefix = base;
    for (std::size_t j = 0; j < i; ++j) prefix.Insert(seq[j]);
    EXPECT_NEAR(sweep.prefix_values[i], f.Value(prefix), 1e-9);
    if (i < 1) continue;
    for (std::size_t j = 0; j < cands.size(); ++j) {
      ElementSet with = prefix;
      with.Insert(cands[j]);
      EXPECT_NEAR(sweep.gain(i, j), f.Value(with) - f.Value(prefix), 1e-9);
    }
  }
}

TEST(CountingOracleTest, BatchAgreesWithSequentialQueries) {
  RandomGraph g = GenerateErdosRenyi(25, 0.3, 8);
  const RevenueObjective f(std::move(g.graph));
  std::mt19937_64 rng(1);
  std::vector<ElementSet> sets;
  for (int i = 0; i < 40; ++i) sets.push_back(testing::RandomSubset(25, rng));
  CountingOracle batch(f);
  CountingOracle single(f);
  const std::vector<double> values = batch.EvaluateBatch(sets);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    EXPECT_EQ(values[i], single.Evaluate(sets[i]));
  }
  EXPECT_EQ(batch.ledger().total_queries, single.ledger().total_queries);
  EXPECT_EQ(batch.ledger().adaptive_rounds, 1u);
  EXPECT_EQ(single.ledger().adaptive_rounds, sets.size());
}

TEST(QueryLedgerTest, Arithmetic) {
  const QueryLedger a{10, 3};
  const QueryLedger b{4, 1};
  EXPECT_EQ(a - b, (QueryLedger{6, 2}));
  EXPECT_EQ((a - b) + b, a);
}

}  // namespace
}  // namespace smk
