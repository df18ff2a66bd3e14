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

#include "smk/objectives/objectives.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "smk/core/errors.h"

namespace smk {
namespace {

std::vector<char> MembershipMask(std::size_t n, std::span<const ElementId> s) {
  std::vector<char> mask(n, 0);
  for (ElementId e : s) mask[e] = 1;
  return mask;
}

class CutState : public IncrementalState {
 public:
  explicit CutState(const WeightedGraph& g) : g_(g), in_(g.n(), 0) {}

  double value() const override { return value_; }

  double Gain(ElementId e) const override {
    if (in_[e]) return 0.0;
    double gain = 0.0;
    for (const Neighbor& nb : g_.neighbors(e)) {
      gain += in_[nb.node] ? -nb.w : nb.w;
    }
    return gain;
  }

  void Add(ElementId e) override {
    if (in_[e]) return;
    value_ += Gain(e);
    in_[e] = 1;
  }

 private:
  const WeightedGraph& g_;
  std::vector<char> in_;
  double value_ = 0.0;
};

class RevenueState : public IncrementalState {
 public:
  explicit RevenueState(const WeightedGraph& g)
      : g_(g), in_(g.n(), 0), inner_(g.n(), 0.0) {}

  double value() const override { return value_; }

  double Gain(ElementId e) const override {
    if (in_[e]) return 0.0;
    // e leaves the outer sum; each outside neighbor gains w(e, v) inside.
    double gain = -std::sqrt(inner_[e]);
    for (const Neighbor& nb : g_.neighbors(e)) {
      if (in_[nb.node]) continue;
      gain += std::sqrt(inner_[nb.node] + nb.w) - std::sqrt(inner_[nb.node]);
    }
    return gain;
  }

  void Add(ElementId e) override {
    if (in_[e]) return;
    value_ += Gain(e);
    in_[e] = 1;
    for (const Neighbor& nb : g_.neighbors(e)) inner_[nb.node] += nb.w;
  }

 private:
  const WeightedGraph& g_;
  std::vector<char> in_;
  std::vector<double> inner_;
  double value_ = 0.0;
};

class ImageSummarizationState : public IncrementalState {
 public:
  explicit ImageSummarizationState(const ImageSummarizationObjective& f)
      : f_(f), in_(f.n(), 0), best_(f.n(), 0.0) {}

  double value() const override { return value_; }

  double Gain(ElementId e) const override {
    if (in_[e]) return 0.0;
    const std::size_t n = f_.n();
    const std::span<const double> col = f_.similarity().row(e);
    double coverage = 0.0;
    if (empty_) {
      for (std::size_t u = 0; u < n; ++u) coverage += col[u];
    } else {
      for (std::size_t u = 0; u < n; ++u) {
        coverage += std::max(0.0, col[u] - best_[u]);
      }
    }
    return coverage - f_.ColumnSum(e) / static_cast<double>(n);
  }

  void Add(ElementId e) override {
    if (in_[e]) return;
    value_ += Gain(e);
    in_[e] = 1;
    const std::span<const double> col = f_.similarity().row(e);
    for (std::size_t u = 0; u < f_.n(); ++u) {
      best_[u] = empty_ ? col[u] : std::max(best_[u], col[u]);
    }
    empty_ = false;
  }

 private:
  const ImageSummarizationObjective& f_;
  std::vector<char> in_;
  std::vector<double> best_;
  bool empty_ = true;
  double value_ = 0.0;
};

class ModularState : public IncrementalState {
 public:
  explicit ModularState(const ModularObjective& f) : f_(f), in_(f.n(), 0) {}

  double value() const override { return value_; }
  double Gain(ElementId e) const override { return in_[e] ? 0.0 : f_.weight(e); }
  void Add(ElementId e) override {
    if (in_[e]) return;
    in_[e] = 1;
    value_ += f_.weight(e);
  }

 private:
  const ModularObjective& f_;
  std::vector<char> in_;
  double value_ = 0.0;
};

class MixtureState : public IncrementalState {
 public:
  explicit MixtureState(const MixtureObjective& f) : f_(f) {
    for (const auto& term : f.terms()) states_.push_back(term.function->NewState());
  }

  double value() const override {
    double total = 0.0;
    for (std::size_t k = 0; k < states_.size(); ++k) {
      total += f_.terms()[k].coefficient * states_[k]->value();
    }
    return total;
  }

  double Gain(ElementId e) const override {
    double total = 0.0;
    for (std::size_t k = 0; k < states_.size(); ++k) {
      total += f_.terms()[k].coefficient * states_[k]->Gain(e);
    }
    return total;
  }

  void Add(ElementId e) override {
    for (auto& state : states_) state->Add(e);
  }

 private:
  const MixtureObjective& f_;
  std::vector<std::unique_ptr<IncrementalState>> states_;
};

}  // namespace

double CutObjective::Value(std::span<const ElementId> s) const {
  const std::vector<char> in = MembershipMask(n(), s);
  double total = 0.0;
  for (const Edge& e : graph_.edges()) {
    if (in[e.u] != in[e.v]) total += e.w;
  }
  return total;
}

std::unique_ptr<IncrementalState> CutObjective::NewState() const {
  return std::make_unique<CutState>(graph_);
}

double RevenueObjective::Value(std::span<const ElementId> s) const {
  const std::vector<char> in = MembershipMask(n(), s);
  std::vector<double> inner(n(), 0.0);
  for (const Edge& e : graph_.edges()) {
    if (in[e.u]) inner[e.v] += e.w;
    if (in[e.v]) inner[e.u] += e.w;
  }
  double total = 0.0;
  for (std::size_t v = 0; v < n(); ++v) {
    if (!in[v]) total += std::sqrt(inner[v]);
  }
  return total;
}

std::unique_ptr<IncrementalState> RevenueObjective::NewState() const {
  return std::make_unique<RevenueState>(graph_);
}

std::vector<double> RevenueCosts(const WeightedGraph& graph,
                                 RevenueCostRule rule, double floor) {
  if (!(floor > 0.0)) throw ParameterError("revenue cost floor must be > 0");
  std::vector<double> costs(graph.n());
  for (ElementId u = 0; u < graph.n(); ++u) {
    const double root = std::sqrt(graph.WeightedDegree(u));
    const double raw = rule == RevenueCostRule::kOneMinusExpNeg
                           ? -std::expm1(-root)
                           : std::expm1(root);
    costs[u] = std::max(raw, floor);
  }
  return costs;
}

ImageSummarizationObjective::ImageSummarizationObjective(SimilarityMatrix sim)
    : sim_(std::move(sim)), column_sums_(sim_.n(), 0.0) {
  for (std::size_t v = 0; v < sim_.n(); ++v) {
    for (std::size_t u = 0; u < sim_.n(); ++u) column_sums_[v] += sim_(u, v);
  }
}

double ImageSummarizationObjective::Value(std::span<const ElementId> s) const {
  if (s.empty()) return 0.0;
  const std::size_t n = sim_.n();
  double coverage = 0.0;
  double penalty = 0.0;
  for (std::size_t u = 0; u < n; ++u) {
    double best = -std::numeric_limits<double>::infinity();
    for (ElementId v : s) {
      best = std::max(best, sim_(u, v));
      penalty += sim_(u, v);
    }
    coverage += best;
  }
  return coverage - penalty / static_cast<double>(n);
}

std::unique_ptr<IncrementalState> ImageSummarizationObjective::NewState() const {
  return std::make_unique<ImageSummarizationState>(*this);
}

double ModularObjective::Value(std::span<const ElementId> s) const {
  double total = 0.0;
  for (ElementId e : s) total += weights_[e];
  return total;
}

std::unique_ptr<IncrementalState> ModularObjective::NewState() const {
  return std::make_unique<ModularState>(*this);
}

MixtureObjective::MixtureObjective(std::string name, std::vector<Term> terms)
    : name_(std::move(name)), terms_(std::move(terms)) {
  if (terms_.empty()) throw ParameterError("mixture needs at least one term");
  n_ = terms_.front().function->n();
  for (const Term& t : terms_) {
    if (t.function->n() != n_) {
      throw ParameterError("mixture terms must share one ground set");
    }
    if (!(t.coefficient >= 0.0)) {
      throw ParameterError("mixture coefficients must be non-negative");
    }
  }
}

double MixtureObjective::Value(std::span<const ElementId> s) const {
  double total = 0.0;
  for (const Term& t : terms_) total += t.coefficient * t.function->Value(s);
  return total;
}

std::unique_ptr<IncrementalState> MixtureObjective::NewState() const {
  return std::make_unique<MixtureState>(*this);
}

}  // namespace smk
