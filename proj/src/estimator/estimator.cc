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

#include "smk/estimator/estimator.h"

#include <cmath>
#include <vector>

#include "smk/core/errors.h"

namespace smk {
namespace {

// ceil that ignores a few ulps of overshoot, so 3950.0000000000005 -> 3950.
std::size_t RobustCeil(double x) {
  return static_cast<std::size_t>(std::ceil(x - 1e-9 * std::max(1.0, std::abs(x))));
}

}  // namespace

GreedyTrace RunDensityGreedy(CountingOracle& oracle,
                             const KnapsackInstance& instance) {
  GreedyTrace trace;
  double cost = 0.0;
  bool first_step = true;
  for (;;) {
    std::vector<ElementId> candidates;
    for (ElementId e = 0; e < instance.n(); ++e) {
      if (trace.set.Contains(e)) continue;
      const bool fits = instance.FitsBudget(
          cost + instance.cost(e), trace.set.size() + 1, [&] {
            std::vector<ElementId> ids(trace.set.begin(), trace.set.end());
            ids.push_back(e);
            return ids;
          });
      if (fits) candidates.push_back(e);
    }
    if (candidates.empty()) break;

    const Marginals m = oracle.MarginalBatch(trace.set, candidates);
    trace.value = m.base_value;
    if (first_step) {
      std::size_t best = 0;
      for (std::size_t j = 1; j < candidates.size(); ++j) {
        if (m.gains[j] > m.gains[best]) best = j;
      }
      trace.best_singleton = candidates[best];
      trace.best_singleton_value = m.base_value + m.gains[best];
      first_step = false;
    }

    std::optional<std::size_t> pick;
    double best_density = 0.0;
    for (std::size_t j = 0; j < candidates.size(); ++j) {
      if (!(m.gains[j] > 0.0)) continue;
      const double density = m.gains[j] / instance.cost(candidates[j]);
      if (!pick || density > best_density) {
        pick = j;
        best_density = density;
      }
    }
    if (!pick) break;
    trace.set.Insert(candidates[*pick]);
    cost += instance.cost(candidates[*pick]);
    trace.value = m.base_value + m.gains[*pick];
  }
  return trace;
}

OptEstimate EstimateGreedy(CountingOracle& oracle,
                           const KnapsackInstance& instance,
                           double assumed_factor) {
  if (!(assumed_factor > 0.0 && assumed_factor <= 1.0)) {
    throw ParameterError("assumed factor must lie in (0, 1]");
  }
  GreedyTrace trace = RunDensityGreedy(oracle, instance);
  OptEstimate est;
  est.assumed_factor = assumed_factor;
  est.best_singleton = trace.best_singleton;
  est.best_singleton_value = trace.best_singleton_value;
  if (trace.best_singleton && trace.best_singleton_value > trace.value) {
    est.s0 = ElementSet{*trace.best_singleton};
    est.value = trace.best_singleton_value;
  } else {
    est.s0 = std::move(trace.set);
    est.value = trace.value;
  }
  return est;
}

OptEstimate EstimateBestSingleton(CountingOracle& oracle,
                                  const KnapsackInstance& instance,
                                  double assumed_factor) {
  if (!(assumed_factor > 0.0 && assumed_factor <= 1.0)) {
    throw ParameterError("assumed factor must lie in (0, 1]");
  }
  std::vector<ElementId> candidates;
  for (ElementId e = 0; e < instance.n(); ++e) {
    if (instance.cost(e) <= instance.budget()) candidates.push_back(e);
  }
  const Marginals m = oracle.MarginalBatch(ElementSet(), candidates);
  OptEstimate est;
  est.assumed_factor = assumed_factor;
  est.value = m.base_value;
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    const double value = m.base_value + m.gains[j];
    if (!est.best_singleton || value > est.best_singleton_value) {
      est.best_singleton = candidates[j];
      est.best_singleton_value = value;
    }
  }
  if (est.best_singleton && est.best_singleton_value > est.value) {
    est.s0 = ElementSet{*est.best_singleton};
    est.value = est.best_singleton_value;
  }
  return est;
}

OptEstimate Estimate(EstimatorKind kind, CountingOracle& oracle,
                     const KnapsackInstance& instance, double assumed_factor) {
  switch (kind) {
    case EstimatorKind::kDensityGreedy:
      return EstimateGreedy(oracle, instance, assumed_factor);
    case EstimatorKind::kBestSingleton:
      return EstimateBestSingleton(oracle, instance, assumed_factor);
  }
  throw ParameterError("unknown estimator");
}

double DefaultAssumedFactor(double delta) { return 1.0 / 8.0 - delta; }

GuessGrid GuessCounts(double alpha, double epsilon, double delta) {
  if (!(epsilon > 0.0 && epsilon < 1.0 / 7.0)) {
    throw ParameterError("epsilon must lie in (0, 1/7)");
  }
  if (!(delta > 0.0 && delta < 1.0 / 8.0)) {
    throw ParameterError("delta must lie in (0, 1/8)");
  }
  if (!(alpha > 0.0)) throw ParameterError("alpha must be > 0");
  const double span = 8.0 * alpha / (epsilon * epsilon * (1.0 - 8.0 * delta));
  GuessGrid grid;
  grid.guesses = RobustCeil(std::log(span) / -std::log1p(-epsilon)) + 1;
  grid.max_count = RobustCeil(
      (static_cast<double>(grid.guesses) / 2.0 + 1.0) / (epsilon * epsilon));
  return grid;
}

std::optional<GuessGrid> GammaAndGuesses(double estimate_value, double alpha,
                                         double epsilon, double delta,
                                         double budget) {
  GuessGrid grid = GuessCounts(alpha, epsilon, delta);
  if (!(budget > 0.0)) throw ParameterError("budget must be > 0");
  if (!(estimate_value > 0.0)) return std::nullopt;
  grid.gamma = 8.0 * alpha * estimate_value /
               ((1.0 - 8.0 * delta) * epsilon * budget);
  return grid;
}

}  // namespace smk
