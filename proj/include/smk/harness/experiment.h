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

#ifndef SMK_HARNESS_EXPERIMENT_H_
#define SMK_HARNESS_EXPERIMENT_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "smk/ast/ast.h"
#include "smk/core/set_function.h"
#include "smk/objectives/objectives.h"

namespace smk {

enum class Algorithm { kAst, kDensityGreedy, kRandomFeasible };
enum class ObjectiveKind { kRevenue, kCut, kImageSumm };

std::string_view ToString(Algorithm a);
std::string_view ToString(ObjectiveKind o);
// Throw ParameterError on unknown names.
Algorithm ParseAlgorithm(std::string_view name);
ObjectiveKind ParseObjective(std::string_view name);

// Synthetic instance. Graph objectives use G(n, p); image summarization
// draws n feature rows of `feature_dim` values and ignores p.
struct GeneratedSource {
  std::size_t n = 200;
  double p = 0.2;
  std::uint64_t seed = 1;
  std::size_t feature_dim = 64;
};

// Edge list (revenue, cut) or feature CSV (image summarization). Costs that
// the file does not carry are drawn uniform on (0, 1) from `cost_seed`.
struct FileSource {
  std::filesystem::path path;
  std::uint64_t cost_seed = 1;
};

struct ExperimentSpec {
  Algorithm algorithm = Algorithm::kAst;
  ObjectiveKind objective = ObjectiveKind::kCut;
  std::variant<GeneratedSource, FileSource> source = GeneratedSource{};
  // Budgets as fractions of the total cost of all elements, each in (0, 1].
  std::vector<double> budget_fractions = DefaultBudgetFractions();
  std::size_t trials = 1;
  AstConfig config;
  RevenueCostRule revenue_rule = RevenueCostRule::kOneMinusExpNeg;
  // When false, wall_ms is written as 0 so output bytes are reproducible.
  bool record_timing = true;

  // 8 evenly spaced fractions 0.025, 0.05, ..., 0.2.
  static std::vector<double> DefaultBudgetFractions();
};

// Throws ParameterError on trials < 1 or a fraction outside (0, 1].
void ValidateSpec(const ExperimentSpec& spec);

struct Problem {
  std::shared_ptr<const SetFunction> objective;
  std::vector<double> costs;
};

Problem BuildProblem(const ExperimentSpec& spec);

struct ExperimentRecord {
  std::string algorithm;
  std::string objective;
  std::size_t n = 0;
  double budget_fraction = 0.0;
  double budget = 0.0;
  double epsilon = 0.0;
  double delta = 0.0;
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  double f_value = 0.0;
  std::uint64_t total_queries = 0;
  std::uint64_t adaptive_rounds_ast = 0;
  std::uint64_t adaptive_rounds_estimator = 0;
  double wall_ms = 0.0;

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

// Per-trial RNG seed derived from (base seed, trial).
std::uint64_t TrialSeed(std::uint64_t base_seed, std::size_t trial);

// One record per (fraction, trial), in that order. Baselines report their own
// rounds under adaptive_rounds_ast and 0 estimator rounds.
std::vector<ExperimentRecord> RunExperiment(const ExperimentSpec& spec);
std::vector<ExperimentRecord> RunExperiment(const ExperimentSpec& spec,
                                            const Problem& problem);

}  // namespace smk

#endif  // SMK_HARNESS_EXPERIMENT_H_
