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

#include "smk/ast/ast.h"

#include <cmath>
#include <string>

#include "smk/core/errors.h"
#include "smk/randbatch/rand_batch.h"

namespace smk {
namespace {

// For each i = 1..|order|, the best f(T^i + e) over e in V with
// c(T^i + e) <= B, where T^i is the first i elements of `order`. Lowest id
// wins ties; e inside T^i is allowed and leaves the prefix unchanged.
// Returns the augmented prefixes followed by T itself, all from one round.
std::vector<Candidate> AugmentPrefixes(CountingOracle& oracle,
                                       const KnapsackInstance& instance,
                                       const ElementSet& order,
                                       const std::string& label) {
  std::vector<ElementId> everything(instance.n());
  for (ElementId e = 0; e < instance.n(); ++e) everything[e] = e;
  const PrefixSweep sweep =
      oracle.SweepPrefixes(ElementSet(), order.members(), everything, 1);

  std::vector<Candidate> out;
  out.reserve(order.size() + 1);
  ElementSet prefix;
  double prefix_cost = 0.0;
  for (std::size_t i = 1; i <= order.size(); ++i) {
    prefix.Insert(order[i - 1]);
    prefix_cost += instance.cost(order[i - 1]);
    std::optional<ElementId> best;
    double best_value = 0.0;
    for (ElementId e = 0; e < instance.n(); ++e) {
      const double value = sweep.prefix_values[i] + sweep.gain(i, e);
      if (best && !(value > best_value)) continue;
      const bool fits =
          prefix.Contains(e) ||
          instance.FitsBudget(prefix_cost + instance.cost(e), i + 1, [&] {
            std::vector<ElementId> ids(prefix.begin(), prefix.end());
            ids.push_back(e);
            return ids;
          });
      if (!fits) continue;
      best = e;
      best_value = value;
    }
    Candidate c;
    c.label = label + "'" + std::to_string(i);
    c.set = prefix;
    // Some element always qualifies: any e already in the prefix does.
    c.set.Insert(*best);
    c.value = best_value;
    out.push_back(std::move(c));
  }
  out.push_back({label, order, sweep.prefix_values.back()});
  return out;
}

}  // namespace

void ValidateAstConfig(const AstConfig& config) {
  GuessCounts(config.alpha, config.epsilon, config.delta);
  if (!(config.accept_probability > 0.0 && config.accept_probability <= 1.0)) {
    throw ParameterError("accept probability must lie in (0, 1]");
  }
  if (config.assumed_factor < 0.0 || config.assumed_factor > 1.0) {
    throw ParameterError("assumed factor must lie in (0, 1], or 0 for default");
  }
}

std::pair<ElementSet, ElementSet> SplitGround(const KnapsackInstance& instance,
                                              double epsilon) {
  const double small = epsilon * instance.budget() / static_cast<double>(instance.n());
  ElementSet v0;
  ElementSet v1;
  for (ElementId e = 0; e < instance.n(); ++e) {
    (instance.cost(e) <= small ? v0 : v1).Insert(e);
  }
  return {std::move(v0), std::move(v1)};
}

MainLoopResult AstMainLoop(CountingOracle& oracle,
                           const KnapsackInstance& instance,
                           const ElementSet& v1, const GuessGrid& grid,
                           const AstConfig& config, std::mt19937_64& rng) {
  if (!(grid.gamma > 0.0)) throw ParameterError("gamma must be > 0");
  MainLoopResult out;
  ElementSet pool = v1;
  RandBatchParams params;
  params.max_count = grid.max_count;
  params.accept_probability = config.accept_probability;
  params.epsilon = config.epsilon;
  for (std::size_t i = 1; i <= grid.guesses; ++i) {
    params.threshold =
        grid.gamma * std::pow(1.0 - config.epsilon, static_cast<double>(i));
    out.thresholds.push_back(params.threshold);
    ElementSet& side = (i % 2 == 1) ? out.x : out.y;
    const RandBatchOutput batch =
        RandBatch(oracle, instance, side, pool, params, rng);
    side.InsertAll(batch.accepted);
    pool = Difference(pool, side);
    if (i == 1) out.x1 = out.x;
    if (i == 2) out.y2 = out.y;
  }
  return out;
}

BoostResult BoostPhase(CountingOracle& oracle, const KnapsackInstance& instance,
                       const MainLoopResult& loop, const ElementSet& v0,
                       const AstConfig& config, std::mt19937_64& rng) {
  BoostResult out;
  const ElementSet small_pool = Union(loop.x1, v0);
  if (instance.Cost(small_pool) <= config.epsilon * instance.budget()) {
    const std::size_t samples =
        config.unsubmax_samples > 0
            ? config.unsubmax_samples
            : static_cast<std::size_t>(std::ceil(1.0 / config.epsilon - 1e-9));
    out.s1 = UnSubMax(oracle, small_pool, samples, rng);
  }

  const std::uint64_t before = oracle.ledger().adaptive_rounds;
  std::vector<Candidate> xs = AugmentPrefixes(oracle, instance, loop.x, "X");
  std::vector<Candidate> ys = AugmentPrefixes(oracle, instance, loop.y, "Y");
  out.prefix_rounds = oracle.ledger().adaptive_rounds - before;

  // Augmented prefixes first, then X and Y, then S1.
  Candidate x_full = std::move(xs.back());
  xs.pop_back();
  Candidate y_full = std::move(ys.back());
  ys.pop_back();
  out.candidates.reserve(xs.size() + ys.size() + 3);
  for (auto& c : xs) out.candidates.push_back(std::move(c));
  for (auto& c : ys) out.candidates.push_back(std::move(c));
  out.candidates.push_back(std::move(x_full));
  out.candidates.push_back(std::move(y_full));
  if (out.s1) out.candidates.push_back({"S1", out.s1->set, out.s1->value});
  return out;
}

AstResult RunAst(CountingOracle& oracle, const KnapsackInstance& instance,
                 const AstConfig& config) {
  ValidateAstConfig(config);
  if (oracle.n() != instance.n()) {
    throw DomainError("objective and instance disagree on n");
  }
  AstResult result;
  std::mt19937_64 rng(config.seed);

  auto [v0, v1] = SplitGround(instance, config.epsilon);

  const QueryLedger start = oracle.ledger();
  const double factor = config.assumed_factor > 0.0
                            ? config.assumed_factor
                            : DefaultAssumedFactor(config.delta);
  result.estimate = Estimate(config.estimator, oracle, instance, factor);
  const QueryLedger after_estimate = oracle.ledger();
  result.estimator_ledger = after_estimate - start;

  std::optional<GuessGrid> grid =
      GammaAndGuesses(result.estimate.value, config.alpha, config.epsilon,
                      config.delta, instance.budget());
  if (!grid) {
    // No feasible set has positive value under the estimate: fall back to
    // the best feasible singleton, or {} when nothing fits.
    result.trivial = true;
    result.grid = GuessCounts(config.alpha, config.epsilon, config.delta);
    if (result.estimate.best_singleton) {
      result.solution = ElementSet{*result.estimate.best_singleton};
      result.value = result.estimate.best_singleton_value;
      result.solution_label = "singleton";
    } else {
      result.solution_label = "empty";
    }
    return result;
  }
  result.grid = *grid;

  MainLoopResult loop = AstMainLoop(oracle, instance, v1, *grid, config, rng);
  BoostResult boost = BoostPhase(oracle, instance, loop, v0, config, rng);
  result.ast_ledger = oracle.ledger() - after_estimate;
  result.boost_prefix_rounds = boost.prefix_rounds;

  std::size_t best = 0;
  for (std::size_t i = 1; i < boost.candidates.size(); ++i) {
    if (boost.candidates[i].value > boost.candidates[best].value) best = i;
  }
  result.candidate_count = boost.candidates.size();
  result.solution = boost.candidates[best].set;
  result.value = boost.candidates[best].value;
  result.solution_label = boost.candidates[best].label;

  const std::size_t nx = loop.x.size();
  const std::size_t ny = loop.y.size();
  auto best_of = [&](std::size_t from, std::size_t count) -> std::optional<Candidate> {
    if (count == 0) return std::nullopt;
    std::size_t b = from;
    for (std::size_t i = from + 1; i < from + count; ++i) {
      if (boost.candidates[i].value > boost.candidates[b].value) b = i;
    }
    return boost.candidates[b];
  };
  result.best_x_prime = best_of(0, nx);
  result.best_y_prime = best_of(nx, ny);
  result.x_value = boost.candidates[nx + ny].value;
  result.y_value = boost.candidates[nx + ny + 1].value;
  result.s1 = std::move(boost.s1);
  result.x = std::move(loop.x);
  result.y = std::move(loop.y);
  result.x1 = std::move(loop.x1);
  result.y2 = std::move(loop.y2);
  return result;
}

}  // namespace smk
