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

#ifndef SMK_RANDBATCH_RAND_BATCH_H_
#define SMK_RANDBATCH_RAND_BATCH_H_

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "smk/core/counting_oracle.h"
#include "smk/core/element_set.h"
#include "smk/core/knapsack_instance.h"

namespace smk {

struct RandBatchParams {
  double threshold = 0.0;      // density threshold, value per unit cost
  std::size_t max_count = 1;   // cap on accepted batches that stopped on t2
  double accept_probability = 1.0;
  double epsilon = 0.1;
};

// Throws ParameterError unless threshold > 0, max_count >= 1,
// 0 < accept_probability <= 1 and 0 < epsilon < 1.
void ValidateRandBatchParams(const RandBatchParams& params);

struct RandBatchOutput {
  ElementSet accepted;   // A, in selection order
  ElementSet offered;    // U, every prefix element that was offered
  ElementSet remaining;  // L at exit
  std::size_t iterations = 0;
  std::size_t count = 0;
};

// A maximal random ordering of `pool` in which every prefix still fits the
// budget on top of `committed` (whose cost is `committed_cost`). Elements are
// drawn uniformly without replacement; after each draw the pool is cut down
// to the elements that still fit.
std::vector<ElementId> GetSequence(const KnapsackInstance& instance,
                                   const ElementSet& committed,
                                   double committed_cost,
                                   std::span<const ElementId> pool,
                                   std::mt19937_64& rng);

// Threshold sampling against g(.) = f(. | conditioning). Repeatedly draws a
// feasible random sequence from the surviving high-density elements, finds
// the shortest prefix after which either the surviving mass drops by an
// epsilon fraction (t1) or the negative marginals outweigh an epsilon share
// of the positive ones (t2), and commits that prefix. Budget checks are
// against B - cost(conditioning), so conditioning + A always fits.
//
// Rounds: one for the initial filter plus one per loop iteration. All the
// prefix marginals of an iteration go out as one batch and are reused for the
// refilter.
RandBatchOutput RandBatch(CountingOracle& oracle,
                          const KnapsackInstance& instance,
                          const ElementSet& conditioning,
                          const ElementSet& pool,
                          const RandBatchParams& params,
                          std::mt19937_64& rng);

}  // namespace smk

#endif  // SMK_RANDBATCH_RAND_BATCH_H_
