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

#ifndef SMK_OBJECTIVES_GENERATORS_H_
#define SMK_OBJECTIVES_GENERATORS_H_

#include <cstdint>
#include <vector>

#include "smk/objectives/graph.h"

namespace smk {

struct RandomGraph {
  WeightedGraph graph;
  // Uniform on (0, 1), one per node.
  std::vector<double> node_costs;
};

// G(n, p): every unordered pair is an edge independently with probability p.
// Edge weights and node costs are uniform on the open interval (0, 1).
// Deterministic in `seed`. Throws DomainError if n < 2 or p is outside [0, 1].
RandomGraph GenerateErdosRenyi(std::size_t n, double p, std::uint64_t seed);

// n synthetic non-negative feature rows of length `dim` (pixel-like values
// in [0, 1)), deterministic in `seed`.
std::vector<std::vector<double>> GenerateFeatures(std::size_t n,
                                                  std::size_t dim,
                                                  std::uint64_t seed);

// n costs uniform on (0, 1).
std::vector<double> GenerateUniformCosts(std::size_t n, std::uint64_t seed);

}  // namespace smk

#endif  // SMK_OBJECTIVES_GENERATORS_H_
