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

#ifndef SMK_TESTS_TESTING_FIXTURES_H_
#define SMK_TESTS_TESTING_FIXTURES_H_

#include <algorithm>
#include <memory>
#include <random>
#include <vector>

#include "smk/core/element_set.h"
#include "smk/objectives/graph.h"
#include "smk/objectives/objectives.h"

namespace smk::testing {

inline WeightedGraph UnitTriangle() {
  return WeightedGraph(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
}

inline WeightedGraph UnitPath() {
  return WeightedGraph(3, {{0, 1, 1.0}, {1, 2, 1.0}});
}

// Center 0, leaves 1..3 with weights 1, 4, 9.
inline WeightedGraph Star() {
  return WeightedGraph(4, {{0, 1, 1.0}, {0, 2, 4.0}, {0, 3, 9.0}});
}

inline ModularObjective Modular321() { return ModularObjective({3.0, 2.0, 1.0}); }

// Uniform random subset of {0..n-1}, each element kept with probability 1/2,
// in shuffled order.
inline ElementSet RandomSubset(std::size_t n, std::mt19937_64& rng) {
  std::vector<ElementId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<ElementId>(i);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::bernoulli_distribution keep(0.5);
  ElementSet out;
  for (ElementId e : ids) {
    if (keep(rng)) out.Insert(e);
  }
  return out;
}

}  // namespace smk::testing

#endif  // SMK_TESTS_TESTING_FIXTURES_H_
