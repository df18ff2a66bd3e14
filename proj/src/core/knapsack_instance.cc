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

#include "smk/core/knapsack_instance.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "smk/core/errors.h"

namespace smk {

KnapsackInstance::KnapsackInstance(std::vector<double> costs, double budget)
    : costs_(std::move(costs)), budget_(budget) {
  if (!(budget_ > 0.0) || !std::isfinite(budget_)) {
    throw DomainError("budget must be finite and positive, got " +
                      std::to_string(budget_));
  }
  for (std::size_t e = 0; e < costs_.size(); ++e) {
    if (!(costs_[e] > 0.0) || !std::isfinite(costs_[e])) {
      throw DomainError("cost of element " + std::to_string(e) +
                        " must be finite and positive");
    }
  }
}

void KnapsackInstance::CheckIds(std::span<const ElementId> ids) const {
  for (ElementId e : ids) {
    if (e >= costs_.size()) {
      throw DomainError("element id " + std::to_string(e) +
                        " out of range for n=" + std::to_string(costs_.size()));
    }
  }
}

double KnapsackInstance::Cost(std::span<const ElementId> ids) const {
  CheckIds(ids);
  std::vector<ElementId> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  double total = 0.0;
  for (ElementId e : sorted) total += costs_[e];
  return total;
}

double KnapsackInstance::Cost(const ElementSet& s) const {
  return Cost(s.members());
}

double KnapsackInstance::TotalCost() const {
  double total = 0.0;
  for (double c : costs_) total += c;
  return total;
}

bool KnapsackInstance::Feasible(const ElementSet& s) const {
  return Cost(s) <= budget_;
}

std::size_t KnapsackInstance::MaxFeasibleCardinality() const {
  std::vector<double> sorted = costs_;
  std::sort(sorted.begin(), sorted.end());
  double total = 0.0;
  std::size_t count = 0;
  for (double c : sorted) {
    if (total + c > budget_) break;
    total += c;
    ++count;
  }
  return count;
}

double KnapsackInstance::Slack(double running_cost, std::size_t set_size) const {
  // Worst-case disagreement between two summation orders of `set_size`
  // non-negative terms is bounded by about set_size * eps * sum.
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  return 2.0 * static_cast<double>(set_size + 1) * kEps *
         std::max(std::abs(running_cost), budget_);
}

}  // namespace smk
