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

#include "smk/harness/experiment.h"

#include <chrono>
#include <random>

#include "smk/baselines/baselines.h"
#include "smk/core/counting_oracle.h"
#include "smk/core/errors.h"
#include "smk/objectives/generators.h"
#include "smk/objectives/loaders.h"

namespace smk {

std::string_view ToString(Algorithm a) {
  switch (a) {
    case Algorithm::kAst: return "ast";
    case Algorithm::kDensityGreedy: return "density_greedy";
    case Algorithm::kRandomFeasible: return "random_feasible";
  }
  return "?";
}

std::string_view ToString(ObjectiveKind o) {
  switch (o) {
    case ObjectiveKind::kRevenue: return "revenue";
    case ObjectiveKind::kCut: return "cut";
    case ObjectiveKind::kImageSumm: return "image_summ";
  }
  return "?";
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kAst, Algorithm::kDensityGreedy,
                      Algorithm::kRandomFeasible}) {
    if (name == ToString(a)) return a;
  }
  throw ParameterError("unknown algorithm '" + std::string(name) + "'");
}

ObjectiveKind ParseObjective(std::string_view name) {
  for (ObjectiveKind o : {ObjectiveKind::kRevenue, ObjectiveKind::kCut,
                          ObjectiveKind::kImageSumm}) {
    if (name == ToString(o)) return o;
  }
  throw ParameterError("unknown objective '" + std::string(name) + "'");
}

std::vector<double> ExperimentSpec::DefaultBudgetFractions() {
  std::vector<double> fractions;
  for (int i = 1; i <= 8; ++i) fractions.push_back(0.025 * i);
  return fractions;
}

void ValidateSpec(const ExperimentSpec& spec) {
  if (spec.trials < 1) throw ParameterError("trials must be >= 1");
  if (spec.budget_fractions.empty()) {
    throw ParameterError("at least one budget fraction is required");
  }
  for (double f : spec.budget_fractions) {
    if (!(f > 0.0 && f <= 1.0)) {
      throw ParameterError("budget fractions must lie in (0, 1]");
    }
  }
  ValidateAstConfig(spec.config);
}

Problem BuildProblem(const ExperimentSpec& spec) {
  Problem problem;
  if (const auto* gen = std::get_if<GeneratedSource>(&spec.source)) {
    if (spec.objective == ObjectiveKind::kImageSumm) {
      auto sim = SimilarityMatrix::FromFeatures(
          GenerateFeatures(gen->n, gen->feature_dim, gen->seed));
      problem.objective =
          std::make_shared<ImageSummarizationObjective>(std::move(sim));
      problem.costs = GenerateUniformCosts(gen->n, gen->seed ^ 0x5bd1e995u);
      return problem;
    }
    RandomGraph g = GenerateErdosRenyi(gen->n, gen->p, gen->seed);
    if (spec.objective == ObjectiveKind::kRevenue) {
      problem.costs = RevenueCosts(g.graph, spec.revenue_rule);
      problem.objective = std::make_shared<RevenueObjective>(std::move(g.graph));
    } else {
      problem.costs = std::move(g.node_costs);
      problem.objective = std::make_shared<CutObjective>(std::move(g.graph));
    }
    return problem;
  }

  const auto& file = std::get<FileSource>(spec.source);
  if (spec.objective == ObjectiveKind::kImageSumm) {
    auto sim = LoadFeatures(file.path);
    problem.costs = GenerateUniformCosts(sim.n(), file.cost_seed);
    problem.objective = std::make_shared<ImageSummarizationObjective>(std::move(sim));
    return problem;
  }
  WeightedGraph graph = LoadEdgeList(file.path);
  if (spec.objective == ObjectiveKind::kRevenue) {
    problem.costs = RevenueCosts(graph, spec.revenue_rule);
    problem.objective = std::make_shared<RevenueObjective>(std::move(graph));
  } else {
    problem.costs = GenerateUniformCosts(graph.n(), file.cost_seed);
    problem.objective = std::make_shared<CutObjective>(std::move(graph));
  }
  return problem;
}

std::uint64_t TrialSeed(std::uint64_t base_seed, std::size_t trial) {
  // splitmix64 finalizer over the pair.
  std::uint64_t z = base_seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<ExperimentRecord> RunExperiment(const ExperimentSpec& spec) {
  ValidateSpec(spec);
  return RunExperiment(spec, BuildProblem(spec));
}

std::vector<ExperimentRecord> RunExperiment(const ExperimentSpec& spec,
                                            const Problem& problem) {
  ValidateSpec(spec);
  const SetFunction& f = *problem.objective;
  double total_cost = 0.0;
  for (double c : problem.costs) total_cost += c;

  std::vector<ExperimentRecord> records;
  for (double fraction : spec.budget_fractions) {
    const KnapsackInstance instance(problem.costs, fraction * total_cost);
    for (std::size_t trial = 0; trial < spec.trials; ++trial) {
      ExperimentRecord rec;
      rec.algorithm = ToString(spec.algorithm);
      rec.objective = ToString(spec.objective);
      rec.n = f.n();
      rec.budget_fraction = fraction;
      rec.budget = instance.budget();
      rec.epsilon = spec.config.epsilon;
      rec.delta = spec.config.delta;
      rec.seed = TrialSeed(spec.config.seed, trial);
      rec.trial = trial;

      CountingOracle oracle(f);
      const auto start = std::chrono::steady_clock::now();
      ElementSet solution;
      switch (spec.algorithm) {
        case Algorithm::kAst: {
          AstConfig config = spec.config;
          config.seed = rec.seed;
          const AstResult result = RunAst(oracle, instance, config);
          solution = result.solution;
          rec.adaptive_rounds_ast = result.ast_ledger.adaptive_rounds;
          rec.adaptive_rounds_estimator = result.estimator_ledger.adaptive_rounds;
          break;
        }
        case Algorithm::kDensityGreedy:
          solution = DensityGreedy(oracle, instance);
          rec.adaptive_rounds_ast = oracle.ledger().adaptive_rounds;
          break;
        case Algorithm::kRandomFeasible: {
          std::mt19937_64 rng(rec.seed);
          solution = RandomFeasible(instance, rng);
          rec.adaptive_rounds_ast = oracle.ledger().adaptive_rounds;
          break;
        }
      }
      const auto stop = std::chrono::steady_clock::now();
      if (spec.record_timing) {
        rec.wall_ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
      }
      rec.total_queries = oracle.ledger().total_queries;
      rec.f_value = f.Value(solution);
      records.push_back(std::move(rec));
    }
  }
  return records;
}

}  // namespace smk
