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

#ifndef SMK_OBJECTIVES_OBJECTIVES_H_
#define SMK_OBJECTIVES_OBJECTIVES_H_

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "smk/core/set_function.h"
#include "smk/objectives/graph.h"

namespace smk {

// Weighted cut: f(S) = sum over u not in S, v in S of w(u, v).
// Non-monotone, symmetric, f(V) = 0.
class CutObjective : public SetFunction {
 public:
  explicit CutObjective(WeightedGraph graph) : graph_(std::move(graph)) {}

  std::size_t n() const override { return graph_.n(); }
  std::string name() const override { return "cut"; }
  double Value(std::span<const ElementId> s) const override;
  std::unique_ptr<IncrementalState> NewState() const override;

  const WeightedGraph& graph() const { return graph_; }

 private:
  WeightedGraph graph_;
};

// Revenue maximization: f(S) = sum over v not in S of
// sqrt(sum over u in S of w(u, v)).
class RevenueObjective : public SetFunction {
 public:
  explicit RevenueObjective(WeightedGraph graph) : graph_(std::move(graph)) {}

  std::size_t n() const override { return graph_.n(); }
  std::string name() const override { return "revenue"; }
  double Value(std::span<const ElementId> s) const override;
  std::unique_ptr<IncrementalState> NewState() const override;

  const WeightedGraph& graph() const { return graph_; }

 private:
  WeightedGraph graph_;
};

// Which reading of the printed revenue cost formula to use. The printed
// 1 - exp(sqrt(d)) is negative for any d > 0, so it is not offered.
enum class RevenueCostRule {
  kOneMinusExpNeg,  // 1 - exp(-sqrt(d)), in (0, 1)
  kExpMinusOne,     // exp(sqrt(d)) - 1
};

// Node costs for revenue maximization from weighted degrees d(u). Costs below
// `floor` (isolated nodes in particular) are raised to `floor`.
std::vector<double> RevenueCosts(const WeightedGraph& graph,
                                 RevenueCostRule rule = RevenueCostRule::kOneMinusExpNeg,
                                 double floor = 1e-6);

// Image summarization:
//   f(S) = sum_u max_{v in S} sim(u, v) - (1/n) sum_u sum_{v in S} sim(u, v),
// with the max over an empty S taken as 0.
class ImageSummarizationObjective : public SetFunction {
 public:
  explicit ImageSummarizationObjective(SimilarityMatrix sim);

  std::size_t n() const override { return sim_.n(); }
  std::string name() const override { return "image_summ"; }
  double Value(std::span<const ElementId> s) const override;
  std::unique_ptr<IncrementalState> NewState() const override;

  const SimilarityMatrix& similarity() const { return sim_; }
  // sum_u sim(u, v).
  double ColumnSum(ElementId v) const { return column_sums_[v]; }

 private:
  SimilarityMatrix sim_;
  std::vector<double> column_sums_;
};

// f(S) = sum of weights. Weights are normally non-negative; negative weights
// are accepted so tests can build degenerate functions.
class ModularObjective : public SetFunction {
 public:
  explicit ModularObjective(std::vector<double> weights)
      : weights_(std::move(weights)) {}

  std::size_t n() const override { return weights_.size(); }
  std::string name() const override { return "modular"; }
  double Value(std::span<const ElementId> s) const override;
  std::unique_ptr<IncrementalState> NewState() const override;

  double weight(ElementId e) const { return weights_[e]; }

 private:
  std::vector<double> weights_;
};

// Non-negative combination sum_k coef_k * f_k of functions over the same
// ground set. Submodular when every component is.
class MixtureObjective : public SetFunction {
 public:
  struct Term {
    double coefficient;
    std::shared_ptr<const SetFunction> function;
  };

  MixtureObjective(std::string name, std::vector<Term> terms);

  std::size_t n() const override { return n_; }
  std::string name() const override { return name_; }
  double Value(std::span<const ElementId> s) const override;
  std::unique_ptr<IncrementalState> NewState() const override;

  std::span<const Term> terms() const { return terms_; }

 private:
  std::string name_;
  std::vector<Term> terms_;
  std::size_t n_ = 0;
};

}  // namespace smk

#endif  // SMK_OBJECTIVES_OBJECTIVES_H_
