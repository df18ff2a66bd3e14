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

#include "smk/randbatch/rand_batch.h"

#include <algorithm>
#include <cmath>

#include "smk/core/errors.h"

namespace smk {
namespace {

// Ids of base + extra[0..extra_count) + {e}, for the exact budget fallback.
std::vector<ElementId> Materialize(const ElementSet& base,
                                   std::span<const ElementId> extra,
                                   std::size_t extra_count, ElementId e) {
  std::vector<ElementId> ids(base.begin(), base.end());
  ids.insert(ids.end(), extra.begin(), extra.begin() + extra_count);
  ids.push_back(e);
  return ids;
}

}  // namespace

void ValidateRandBatchParams(const RandBatchParams& params) {
  if (!(params.threshold > 0.0) || !std::isfinite(params.threshold)) {
    throw ParameterError("threshold must be finite and > 0");
  }
  if (params.max_count < 1) throw ParameterError("max_count must be >= 1");
  if (!(params.accept_probability > 0.0 && params.accept_probability <= 1.0)) {
    throw ParameterError("accept probability must lie in (0, 1]");
  }
  if (!(params.epsilon > 0.0 && params.epsilon < 1.0)) {
    throw ParameterError("epsilon must lie in (0, 1)");
  }
}

std::vector<ElementId> GetSequence(const KnapsackInstance& instance,
                                   const ElementSet& committed,
                                   double committed_cost,
                                   std::span<const ElementId> pool,
                                   std::mt19937_64& rng) {
  std::vector<ElementId> remaining(pool.begin(), pool.end());
  std::vector<ElementId> sequence;
  double running = committed_cost;
  while (!remaining.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, remaining.size() - 1);
    const std::size_t idx = pick(rng);
    const ElementId chosen = remaining[idx];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(idx));
    sequence.push_back(chosen);
    running += instance.cost(chosen);
    const std::size_t size = committed.size() + sequence.size() + 1;
    std::erase_if(remaining, [&](ElementId e) {
      return !instance.FitsBudget(running + instance.cost(e), size, [&] {
        return Materialize(committed, sequence, sequence.size(), e);
      });
    });
  }
  return sequence;
}

RandBatchOutput RandBatch(CountingOracle& oracle,
                          const KnapsackInstance& instance,
                          const ElementSet& conditioning,
                          const ElementSet& pool,
                          const RandBatchParams& params,
                          std::mt19937_64& rng) {
  ValidateRandBatchParams(params);
  const double rho = params.threshold;
  const double eps = params.epsilon;

  RandBatchOutput out;
  ElementSet base = conditioning;  // conditioning + A
  double base_cost = instance.Cost(conditioning);

  auto fits = [&](double running, std::size_t size, auto&& materialize) {
    return instance.FitsBudget(running, size, materialize);
  };

  // Initial filter: density >= rho against A = {} and feasible.
  std::vector<ElementId> candidates;
  for (ElementId u : pool) {
    if (!base.Contains(u)) candidates.push_back(u);
  }
  std::vector<ElementId> live;
  {
    const Marginals m = oracle.MarginalBatch(base, candidates);
    for (std::size_t j = 0; j < candidates.size(); ++j) {
      const ElementId u = candidates[j];
      const double c = instance.cost(u);
      if (m.gains[j] / c >= rho &&
          fits(base_cost + c, base.size() + 1,
               [&] { return Materialize(base, {}, 0, u); })) {
        live.push_back(u);
      }
    }
  }

  std::bernoulli_distribution accept(params.accept_probability);
  while (!live.empty() && out.count < params.max_count) {
    const std::vector<ElementId> seq =
        GetSequence(instance, base, base_cost, live, rng);
    const std::size_t d = seq.size();
    const PrefixSweep sweep = oracle.SweepPrefixes(base, seq, live);

    double live_cost = 0.0;
    for (ElementId u : live) live_cost += instance.cost(u);

    std::size_t t1 = d;
    std::size_t t2 = d;
    bool found_t1 = false;
    bool found_t2 = false;
    double prefix_cost = base_cost;
    double negative_prefix_loss = 0.0;  // sum over D_i of |g(v_j | A + V_{j-1})|
    for (std::size_t i = 0; i <= d && !(found_t1 && found_t2); ++i) {
      if (i > 0) {
        prefix_cost += instance.cost(seq[i - 1]);
        const double step = sweep.prefix_values[i] - sweep.prefix_values[i - 1];
        if (step < 0.0) negative_prefix_loss += -step;
      }
      double plus_cost = 0.0;
      double plus_gain = 0.0;
      double minus_loss = 0.0;
      for (std::size_t j = 0; j < live.size(); ++j) {
        const ElementId u = live[j];
        const double g = sweep.gain(i, j);
        const double c = instance.cost(u);
        if (g < 0.0) minus_loss += -g;
        if (g / c >= rho &&
            fits(prefix_cost + c, base.size() + i + 1,
                 [&] { return Materialize(base, seq, i, u); })) {
          plus_cost += c;
          plus_gain += g;
        }
      }
      if (!found_t1 && plus_cost <= (1.0 - eps) * live_cost) {
        t1 = i;
        found_t1 = true;
      }
      if (!found_t2 && eps * plus_gain <= minus_loss + negative_prefix_loss) {
        t2 = i;
        found_t2 = true;
      }
    }
    // Every live element is a positive-density feasible element at i = 0, so
    // neither stopping rule can fire there; clamp anyway so a rounding tie
    // cannot stall the loop.
    const std::size_t t_star = std::max<std::size_t>(std::min(t1, t2), 1);

    for (std::size_t i = 0; i < t_star; ++i) out.offered.Insert(seq[i]);
    bool accepted = true;
    if (params.accept_probability < 1.0) accepted = accept(rng);
    if (accepted) {
      for (std::size_t i = 0; i < t_star; ++i) {
        out.accepted.Insert(seq[i]);
        base.Insert(seq[i]);
        base_cost += instance.cost(seq[i]);
      }
      if (t2 <= t1) ++out.count;
    }
    ++out.iterations;

    // Refilter with the marginals already computed for the committed prefix.
    const std::size_t row = accepted ? t_star : 0;
    std::vector<ElementId> next;
    for (std::size_t j = 0; j < live.size(); ++j) {
      const ElementId u = live[j];
      if (out.offered.Contains(u)) continue;
      const double c = instance.cost(u);
      if (sweep.gain(row, j) / c >= rho &&
          fits(base_cost + c, base.size() + 1,
               [&] { return Materialize(base, {}, 0, u); })) {
        next.push_back(u);
      }
    }
    live = std::move(next);
  }

  out.remaining = ElementSet(std::span<const ElementId>(live));
  return out;
}

}  // namespace smk
