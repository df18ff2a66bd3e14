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

#ifndef SMK_OBJECTIVES_GRAPH_H_
#define SMK_OBJECTIVES_GRAPH_H_

#include <cstddef>
#include <span>
#include <vector>

#include "smk/core/element_set.h"

namespace smk {

struct Edge {
  ElementId u;
  ElementId v;
  double w;
};

struct Neighbor {
  ElementId node;
  double w;
};

// Undirected graph with non-negative edge weights. Adjacency is kept in CSR
// form so objectives can walk a node's neighborhood without allocation.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  // Throws DomainError on self loops, ids >= n, duplicate undirected pairs,
  // or weights that are negative or non-finite.
  WeightedGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t n() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Neighbor> neighbors(ElementId u) const {
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }
  // Sum of incident edge weights.
  double WeightedDegree(ElementId u) const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
};

// Dense symmetric similarity matrix with unit diagonal.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;

  // Row-major n x n values. Throws DomainError if not square, not symmetric,
  // the diagonal is not 1, or any entry is non-finite.
  SimilarityMatrix(std::size_t n, std::vector<double> values);

  // Cosine similarity between feature rows. Throws DataError on a zero-norm
  // row or ragged input.
  static SimilarityMatrix FromFeatures(
      const std::vector<std::vector<double>>& rows);

  std::size_t n() const { return n_; }
  double operator()(std::size_t u, std::size_t v) const {
    return values_[u * n_ + v];
  }
  std::span<const double> row(std::size_t u) const {
    return {values_.data() + u * n_, n_};
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

}  // namespace smk

#endif  // SMK_OBJECTIVES_GRAPH_H_
