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

#include "smk/objectives/generators.h"

#include <random>
#include <string>

#include "smk/core/errors.h"

namespace smk {
namespace {

// Uniform on (0, 1): redraw the (rare) exact zero.
double OpenUnit(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double x = 0.0;
  while (x == 0.0) x = unit(rng);
  return x;
}

}  // namespace

RandomGraph GenerateErdosRenyi(std::size_t n, double p, std::uint64_t seed) {
  if (n < 2) {
    throw DomainError("Erdos-Renyi graph needs n >= 2, got " + std::to_string(n));
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p * n * (n - 1) / 2 * 1.05) + 16);
  for (ElementId u = 0; u < n; ++u) {
    for (ElementId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v, OpenUnit(rng)});
    }
  }
  RandomGraph out;
  out.graph = WeightedGraph(n, std::move(edges));
  out.node_costs.resize(n);
  for (double& c : out.node_costs) c = OpenUnit(rng);
  return out;
}

std::vector<std::vector<double>> GenerateFeatures(std::size_t n,
                                                  std::size_t dim,
                                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pixel(0.0, 1.0);
  std::vector<std::vector<double>> rows(n, std::vector<double>(dim));
  for (auto& row : rows) {
    // Each row mixes a shared brightness level with per-pixel noise so the
    // similarities spread out instead of concentrating near one value.
    const double level = pixel(rng);
    for (double& x : row) x = 0.5 * level + 0.5 * pixel(rng);
  }
  return rows;
}

std::vector<double> GenerateUniformCosts(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> costs(n);
  for (double& c : costs) c = OpenUnit(rng);
  return costs;
}

}  // namespace smk
