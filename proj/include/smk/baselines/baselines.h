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

#ifndef SMK_BASELINES_BASELINES_H_
#define SMK_BASELINES_BASELINES_H_

#include <cstddef>
#include <random>

#include "smk/core/counting_oracle.h"
#include "smk/core/element_set.h"
#include "smk/core/knapsack_instance.h"
#include "smk/core/set_function.h"

namespace smk {

inline constexpr std::size_t kBruteForceMaxN = 24;

struct ExactOptimum {
  ElementSet set;  // ascending ids
  double value = 0.0;
};

// Exact max of f over feasible sets by depth-first enumeration over ids.
// Evaluates f directly, never through a CountingOracle. With `prune` a branch
// stops adding once the remaining budget is below the cheapest remaining
// cost. Ties go to the lexicographically smallest id list.
// Throws RefusalError when n > kBruteForceMaxN.
ExactOptimum BruteForceOpt(const SetFunction& f,
                           const KnapsackInstance& instance,
                           bool prune = true);

// Exact max of f over all subsets, no budget. Same cap.
ExactOptimum BruteForceUnconstrained(const SetFunction& f);

// Density greedy without the best-singleton fallback.
ElementSet DensityGreedy(CountingOracle& oracle, const KnapsackInstance& instance);

// Random permutation of V, keeping each element that still fits.
ElementSet RandomFeasible(const KnapsackInstance& instance, std::mt19937_64& rng);

}  // namespace smk

#endif  // SMK_BASELINES_BASELINES_H_
