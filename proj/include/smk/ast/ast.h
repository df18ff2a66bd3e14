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

#ifndef SMK_AST_AST_H_
#define SMK_AST_AST_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "smk/core/counting_oracle.h"
#include "smk/core/element_set.h"
#include "smk/core/knapsack_instance.h"
#include "smk/estimator/estimator.h"
#include "smk/unsubmax/unsub_max.h"

namespace smk {

struct AstConfig {
  double alpha = 1.0 / 7.0;
  double epsilon = 0.1;   // in (0, 1/7)
  double delta = 0.12;    // in (0, 1/8)
  double accept_probability = 1.0;
  std::uint64_t seed = 0;
  // Random subsets drawn by UnSubMax; 0 means ceil(1 / epsilon).
  std::size_t unsubmax_samples = 0;
  // Factor the estimate is assumed to certify; 0 means 1/8 - delta.
  double assumed_factor = 0.0;
  EstimatorKind estimator = EstimatorKind::kDensityGreedy;
};

// Throws ParameterError when a field is out of range.
void ValidateAstConfig(const AstConfig& config);

// V0 = {e : c(e) <= eps B / n}, V1 = V \ V0, both in ascending id order.
std::pair<ElementSet, ElementSet> SplitGround(const KnapsackInstance& instance,
                                              double epsilon);

struct MainLoopResult {
  ElementSet x;   // insertion order is the order elements were accepted
  ElementSet y;
  ElementSet x1;  // X after iteration 1
  ElementSet y2;  // Y after iteration 2
  std::vector<double> thresholds;
};

// Alternating threshold loop: odd iterations grow X with RandBatch on
// f(. | X), even iterations grow Y on f(. | Y), both drawing from a shared
// pool that starts at V1 and loses whatever either side takes. Thresholds
// walk down gamma (1 - eps)^i for i = 1..guesses.
MainLoopResult AstMainLoop(CountingOracle& oracle,
                           const KnapsackInstance& instance,
                           const ElementSet& v1, const GuessGrid& grid,
                           const AstConfig& config, std::mt19937_64& rng);

struct Candidate {
  std::string label;
  ElementSet set;
  double value = 0.0;
};

struct BoostResult {
  // Every compared candidate in tie-break order: X'^1..X'^|X|, Y'^1..Y'^|Y|,
  // X, Y, then S1 when it was computed.
  std::vector<Candidate> candidates;
  std::optional<UnSubMaxResult> s1;
  // Rounds spent on the prefix augmentations alone (always 2).
  std::uint64_t prefix_rounds = 0;
};

// Boosting phase: optional UnSubMax on X1 + V0 when that set costs at most
// eps B, then for every prefix X^i (and Y^i) the best single feasible
// augmentation over all of V. All X prefixes share one round, all Y
// prefixes another.
BoostResult BoostPhase(CountingOracle& oracle, const KnapsackInstance& instance,
                       const MainLoopResult& loop, const ElementSet& v0,
                       const AstConfig& config, std::mt19937_64& rng);

struct AstResult {
  ElementSet solution;
  double value = 0.0;
  std::string solution_label;

  ElementSet x;
  ElementSet y;
  ElementSet x1;
  ElementSet y2;
  double x_value = 0.0;
  double y_value = 0.0;
  OptEstimate estimate;
  std::optional<UnSubMaxResult> s1;
  std::optional<Candidate> best_x_prime;
  std::optional<Candidate> best_y_prime;
  std::size_t candidate_count = 0;

  GuessGrid grid;
  // True when the estimate had no positive value and the best feasible
  // singleton was returned directly.
  bool trivial = false;

  QueryLedger estimator_ledger;
  QueryLedger ast_ledger;          // main loop + boost
  std::uint64_t boost_prefix_rounds = 0;
};

// Full pipeline: split, estimate, grid, alternating loop, boost, argmax.
// Deterministic in config.seed. Estimator and AST-proper queries are
// reported separately.
AstResult RunAst(CountingOracle& oracle, const KnapsackInstance& instance,
                 const AstConfig& config);

}  // namespace smk

#endif  // SMK_AST_AST_H_
