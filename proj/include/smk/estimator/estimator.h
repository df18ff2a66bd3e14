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

#ifndef SMK_ESTIMATOR_ESTIMATOR_H_
#define SMK_ESTIMATOR_ESTIMATOR_H_

#include <cstddef>
#include <optional>

#include "smk/core/counting_oracle.h"
#include "smk/core/element_set.h"
#include "smk/core/knapsack_instance.h"

namespace smk {

// Result of the density greedy: repeatedly add the feasible element with the
// largest f(e | S) / c(e) among those with positive marginal, one marginal
// batch per step. Ties go to the lowest id.
struct GreedyTrace {
  ElementSet set;
  double value = 0.0;
  // Best feasible singleton seen in the first step, if any element fits.
  std::optional<ElementId> best_singleton;
  double best_singleton_value = 0.0;
};

GreedyTrace RunDensityGreedy(CountingOracle& oracle,
                             const KnapsackInstance& instance);

// Seed solution whose value anchors the threshold grid. The caller treats
// assumed_factor * OPT <= value <= OPT.
struct OptEstimate {
  ElementSet s0;
  double value = 0.0;
  double assumed_factor = 0.0;
  // Carried over from the greedy's first step.
  std::optional<ElementId> best_singleton;
  double best_singleton_value = 0.0;
};

// Density greedy, or the best singleton when that is worth more.
OptEstimate EstimateGreedy(CountingOracle& oracle,
                           const KnapsackInstance& instance,
                           double assumed_factor);

// Best feasible singleton only: one round, n + 1 queries.
OptEstimate EstimateBestSingleton(CountingOracle& oracle,
                                  const KnapsackInstance& instance,
                                  double assumed_factor);

enum class EstimatorKind { kDensityGreedy, kBestSingleton };

OptEstimate Estimate(EstimatorKind kind, CountingOracle& oracle,
                     const KnapsackInstance& instance, double assumed_factor);

// 1/8 - delta.
double DefaultAssumedFactor(double delta);

struct GuessGrid {
  double gamma = 0.0;          // top of the threshold grid
  std::size_t guesses = 0;     // number of thresholds, Delta
  std::size_t max_count = 0;   // RandBatch count cap, M
};

// Delta = ceil(log_{1/(1-eps)}(8 alpha / (eps^2 (1 - 8 delta)))) + 1 and
// M = ceil((Delta / 2 + 1) / eps^2). Throws ParameterError unless
// 0 < eps < 1/7, 0 < delta < 1/8 and alpha > 0.
GuessGrid GuessCounts(double alpha, double epsilon, double delta);

// Adds Gamma = 8 alpha f(S0) / ((1 - 8 delta) eps B). Returns nullopt when
// f(S0) <= 0: the instance has no positive feasible value to anchor on.
std::optional<GuessGrid> GammaAndGuesses(double estimate_value, double alpha,
                                         double epsilon, double delta,
                                         double budget);

}  // namespace smk

#endif  // SMK_ESTIMATOR_ESTIMATOR_H_
