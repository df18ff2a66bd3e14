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

#ifndef SMK_UNSUBMAX_UNSUB_MAX_H_
#define SMK_UNSUBMAX_UNSUB_MAX_H_

#include <cstddef>
#include <random>

#include "smk/core/counting_oracle.h"
#include "smk/core/element_set.h"

namespace smk {

struct UnSubMaxResult {
  ElementSet set;
  double value = 0.0;
};

// Unconstrained maximization over subsets of `ground` in one adaptive round.
// Draws `samples` uniform random subsets (each element kept with probability
// 1/2) and evaluates them together with {} and `ground`; returns the best,
// earliest in that order on ties. A uniform random subset is a 1/4
// approximation in expectation for non-negative submodular f.
// Always samples + 2 queries, even for an empty ground set.
UnSubMaxResult UnSubMax(CountingOracle& oracle, const ElementSet& ground,
                        std::size_t samples, std::mt19937_64& rng);

}  // namespace smk

#endif  // SMK_UNSUBMAX_UNSUB_MAX_H_
