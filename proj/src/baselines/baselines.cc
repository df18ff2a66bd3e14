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

#include "smk/baselines/baselines.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "smk/core/errors.h"
#include "smk/estimator/estimator.h"

namespace smk {
namespace {

class Enumerator {
 public:
  Enumerator(const SetFunction& f, std::span<const double> costs, double budget,
             bool prune)
      : f_(f), costs_(costs), budget_(budget), prune_(prune) {
    const std::size_t n = costs_.size();
    suffix_min_.assign(n + 1, std::numeric_limits<double>::infinity());
    for (std::size_t i = n; i-- > 0;) {
      suffix_min_[i] = std::min(suffix_min_[i + 1], costs_[i]);
    }
  }

  ExactOptimum Run() {
    best_.value = f_.Value(current_);
    best_ids_ = current_;
    Visit(0, 0.0);
    best_.set = ElementSet(std::span<const ElementId>(best_ids_));
    return best_;
  }

 private:
  // current_ is feasible and already scored; try extending with ids >= next.
  void Visit(std::size_t next, double cost) {
    for (std::size_t e = next; e < costs_.size(); ++e) {
      if (prune_ && cost + suffix_min_[e] > budget_) return;
      // Ids are appended in ascending order, so this is the canonical sum.
      const double extended = cost + costs_[e];
      if (extended > budget_) continue;
      current_.push_back(static_cast<ElementId>(e));
      Score();
      Visit(e + 1, extended);
      current_.pop_back();
    }
  }

  void Score() {
    const double value = f_.Value(current_);
    if (value > best_.value ||
        (value == best_.value &&
         std::lexicographical_compare(current_.begin(), current_.end(),
                                      best_ids_.begin(), best_ids_.end()))) {
      best_.value = value;
      best_ids_ = current_;
    }
  }

  const SetFunction& f_;
  std::span<const double> costs_;
  double budget_;
  bool prune_;
  std::vector<double> suffix_min_;
  std::vector<ElementId> current_;
  std::vector<ElementId> best_ids_;
  ExactOptimum best_;
};

void CheckCap(std::size_t n) {
  if (n > kBruteForceMaxN) {
    throw RefusalError("brute force refuses n=" + std::to_string(n) +
                       " (cap " + std::to_string(kBruteForceMaxN) + ")");
  }
}

}  // namespace

ExactOptimum BruteForceOpt(const SetFunction& f,
                           const KnapsackInstance& instance, bool prune) {
  CheckCap(instance.n());
  if (f.n() != instance.n()) throw DomainError("objective and instance disagree on n");
  return Enumerator(f, instance.costs(), instance.budget(), prune).Run();
}

ExactOptimum BruteForceUnconstrained(const SetFunction& f) {
  CheckCap(f.n());
  const std::vector<double> unit(f.n(), 1.0);
  return Enumerator(f, unit, static_cast<double>(f.n()), false).Run();
}

ElementSet DensityGreedy(CountingOracle& oracle, const KnapsackInstance& instance) {
  return RunDensityGreedy(oracle, instance).set;
}

ElementSet RandomFeasible(const KnapsackInstance& instance, std::mt19937_64& rng) {
  std::vector<ElementId> order(instance.n());
  std::iota(order.begin(), order.end(), ElementId{0});
  std::shuffle(order.begin(), order.end(), rng);
  ElementSet kept;
  double cost = 0.0;
  for (ElementId e : order) {
    const bool fits =
        instance.FitsBudget(cost + instance.cost(e), kept.size() + 1, [&] {
          std::vector<ElementId> ids(kept.begin(), kept.end());
          ids.push_back(e);
          return ids;
        });
    if (!fits) continue;
    kept.Insert(e);
    cost += instance.cost(e);
  }
  return kept;
}

}  // namespace smk
