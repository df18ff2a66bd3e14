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

#include "smk/objectives/graph.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "smk/core/errors.h"

namespace smk {

WeightedGraph::WeightedGraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  std::vector<std::pair<ElementId, ElementId>> pairs;
  pairs.reserve(edges_.size());
  std::vector<std::size_t> degree(n_, 0);
  for (const Edge& e : edges_) {
    if (e.u >= n_ || e.v >= n_) {
      throw DomainError("edge (" + std::to_string(e.u) + ", " +
                        std::to_string(e.v) + ") references a node >= n=" +
                        std::to_string(n_));
    }
    if (e.u == e.v) {
      throw DomainError("self loop on node " + std::to_string(e.u));
    }
    if (!(e.w >= 0.0) || !std::isfinite(e.w)) {
      throw DomainError("edge weights must be finite and non-negative");
    }
    pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    ++degree[e.u];
    ++degree[e.v];
  }
  std::sort(pairs.begin(), pairs.end());
  auto dup = std::adjacent_find(pairs.begin(), pairs.end());
  if (dup != pairs.end()) {
    throw DomainError("duplicate edge (" + std::to_string(dup->first) + ", " +
                      std::to_string(dup->second) + ")");
  }

  offsets_.assign(n_ + 1, 0);
  for (std::size_t u = 0; u < n_; ++u) offsets_[u + 1] = offsets_[u] + degree[u];
  adjacency_.resize(offsets_[n_]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[cursor[e.u]++] = {e.v, e.w};
    adjacency_[cursor[e.v]++] = {e.u, e.w};
  }
}

double WeightedGraph::WeightedDegree(ElementId u) const {
  double total = 0.0;
  for (const Neighbor& nb : neighbors(u)) total += nb.w;
  return total;
}

SimilarityMatrix::SimilarityMatrix(std::size_t n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (values_.size() != n_ * n_) {
    throw DomainError("similarity matrix must be n x n");
  }
  for (std::size_t u = 0; u < n_; ++u) {
    if ((*this)(u, u) != 1.0) {
      throw DomainError("similarity diagonal must be 1 at row " +
                        std::to_string(u));
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (!std::isfinite((*this)(u, v))) {
        throw DomainError("similarity entries must be finite");
      }
      if ((*this)(u, v) != (*this)(v, u)) {
        throw DomainError("similarity matrix must be symmetric");
      }
    }
  }
}

SimilarityMatrix SimilarityMatrix::FromFeatures(
    const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) return SimilarityMatrix(0, {});
  const std::size_t dim = rows.front().size();
  std::vector<double> sq_norms(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (rows[u].size() != dim) {
      throw DataError("feature row " + std::to_string(u) + " has " +
                      std::to_string(rows[u].size()) + " values, expected " +
                      std::to_string(dim));
    }
    double sq = 0.0;
    for (double x : rows[u]) sq += x * x;
    sq_norms[u] = sq;
    if (!(sq > 0.0) || !std::isfinite(sq)) {
      throw DataError("feature row " + std::to_string(u) +
                      " has zero or non-finite norm");
    }
  }
  std::vector<double> values(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    values[u * n + u] = 1.0;
    for (std::size_t v = u + 1; v < n; ++v) {
      double dot = 0.0;
      for (std::size_t k = 0; k < dim; ++k) dot += rows[u][k] * rows[v][k];
      // sqrt(a * a) == a exactly, so identical rows give similarity 1.
      const double sim =
          std::clamp(dot / std::sqrt(sq_norms[u] * sq_norms[v]), -1.0, 1.0);
      values[u * n + v] = sim;
      values[v * n + u] = sim;
    }
  }
  return SimilarityMatrix(n, std::move(values));
}

}  // namespace smk
