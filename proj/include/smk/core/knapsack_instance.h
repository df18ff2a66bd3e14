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

#ifndef SMK_CORE_KNAPSACK_INSTANCE_H_
#define SMK_CORE_KNAPSACK_INSTANCE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "smk/core/element_set.h"

namespace smk {

// The (V, c, B) part of a knapsack-constrained instance. Costs are modular:
// cost(S) is the sum of per-element costs, always accumulated in ascending id
// order so feasibility answers are reproducible bit for bit.
class KnapsackInstance {
 public:
  // Throws DomainError unless every cost is finite and > 0 and budget > 0.
  KnapsackInstance(std::vector<double> costs, double budget);

  std::size_t n() const { return costs_.size(); }
  double budget() const { return budget_; }
  double cost(ElementId e) const { return costs_[e]; }
  std::span<const double> costs() const { return costs_; }

  double Cost(const ElementSet& s) const;
  double Cost(std::span<const ElementId> ids) const;
  double TotalCost() const;

  // cost(s) <= budget, inclusive. Throws DomainError on out-of-range ids.
  bool Feasible(const ElementSet& s) const;

  // Largest cardinality of any feasible set (cheapest-first packing).
  std::size_t MaxFeasibleCardinality() const;

  // Decides cost(T) <= budget for a set T whose cost the caller tracked
  // incrementally as `running_cost` (in some other summation order). When the
  // running value is within rounding distance of the budget, `materialize`
  // is called to produce T's ids and the canonical sum decides, so the answer
  // always agrees with Feasible(T).
  template <typename Materialize>
  bool FitsBudget(double running_cost, std::size_t set_size,
                  Materialize&& materialize) const {
    const double slack = Slack(running_cost, set_size);
    if (running_cost <= budget_ - slack) return true;
    if (running_cost > budget_ + slack) return false;
    const std::vector<ElementId> ids = materialize();
    return Cost(ids) <= budget_;
  }

  void CheckIds(std::span<const ElementId> ids) const;

 private:
  double Slack(double running_cost, std::size_t set_size) const;

  std::vector<double> costs_;
  double budget_;
};

}  // namespace smk

#endif  // SMK_CORE_KNAPSACK_INSTANCE_H_
