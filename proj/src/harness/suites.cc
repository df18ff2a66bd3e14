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

#include "smk/harness/suites.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "smk/baselines/baselines.h"
#include "smk/objectives/generators.h"
#include "smk/objectives/objectives.h"

namespace smk {
namespace {

bool NearlyEqual(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b));
}

}  // namespace

std::vector<std::string> CheckAstInvariants(const SetFunction& f,
                                            const KnapsackInstance& instance,
                                            const AstResult& result,
                                            const QueryLedger& total) {
  std::vector<std::string> bad;
  if (!instance.Feasible(result.solution)) bad.push_back("solution over budget");
  if (!Disjoint(result.x, result.y)) bad.push_back("X and Y intersect");
  if (!NearlyEqual(f.Value(result.solution), result.value)) {
    bad.push_back("reported value differs from f(solution)");
  }
  if (result.estimator_ledger + result.ast_ledger != total) {
    bad.push_back("estimator + AST ledgers do not add up to the oracle ledger");
  }
  if (result.trivial) return bad;

  double best = -std::numeric_limits<double>::infinity();
  auto candidate = [&](const ElementSet& s, double value, const char* name) {
    if (!instance.Feasible(s)) bad.push_back(std::string(name) + " over budget");
    best = std::max(best, value);
  };
  candidate(result.x, result.x_value, "X");
  candidate(result.y, result.y_value, "Y");
  if (result.best_x_prime) {
    candidate(result.best_x_prime->set, result.best_x_prime->value, "X'");
  }
  if (result.best_y_prime) {
    candidate(result.best_y_prime->set, result.best_y_prime->value, "Y'");
  }
  if (result.s1) candidate(result.s1->set, result.s1->value, "S1");
  if (!instance.Feasible(result.estimate.s0)) bad.push_back("S0 over budget");
  if (result.value != best) bad.push_back("solution value is not the candidate max");
  if (result.boost_prefix_rounds != 2) {
    bad.push_back("prefix augmentation used " +
                  std::to_string(result.boost_prefix_rounds) + " rounds");
  }
  const std::size_t expected =
      result.x.size() + result.y.size() + 2 + (result.s1 ? 1 : 0);
  if (result.candidate_count != expected) {
    bad.push_back("compared " + std::to_string(result.candidate_count) +
                  " candidates, expected " + std::to_string(expected));
  }
  return bad;
}

std::vector<SmallInstance> MakeRatioInstances(std::uint64_t seed) {
  struct Shape {
    std::size_t n;
    double fraction;
  };
  const Shape shapes[] = {{10, 0.2}, {12, 0.4}, {14, 0.6}, {14, 0.2}};
  std::vector<SmallInstance> out;
  std::uint64_t s = seed;
  for (const char* kind : {"cut", "revenue", "mixture"}) {
    for (const Shape& shape : shapes) {
      ++s;
      SmallInstance inst;
      inst.budget_fraction = shape.fraction;
      inst.label = std::string(kind) + "/n=" + std::to_string(shape.n) +
                   "/B=" + std::to_string(shape.fraction).substr(0, 3);
      const std::string_view k = kind;
      if (k == "cut") {
        RandomGraph g = GenerateErdosRenyi(shape.n, 0.5, s);
        inst.costs = std::move(g.node_costs);
        inst.objective = std::make_shared<CutObjective>(std::move(g.graph));
      } else if (k == "revenue") {
        RandomGraph g = GenerateErdosRenyi(shape.n, 0.5, s);
        inst.costs = RevenueCosts(g.graph);
        inst.objective = std::make_shared<RevenueObjective>(std::move(g.graph));
      } else {
        RandomGraph g = GenerateErdosRenyi(shape.n, 0.3, s);
        std::mt19937_64 rng(s * 31 + 5);
        std::uniform_real_distribution<double> weight(0.0, 2.0);
        std::vector<double> weights(shape.n);
        for (double& w : weights) w = weight(rng);
        inst.costs = std::move(g.node_costs);
        inst.objective = std::make_shared<MixtureObjective>(
            "mixture",
            std::vector<MixtureObjective::Term>{
                {1.0, std::make_shared<ModularObjective>(std::move(weights))},
                {1.0, std::make_shared<CutObjective>(std::move(g.graph))}});
      }
      out.push_back(std::move(inst));
    }
  }
  return out;
}

RatioSuiteReport RunRatioSuite(const RatioSuiteOptions& options) {
  RatioSuiteReport report;
  report.target = 1.0 / 7.0 - options.config.epsilon;
  report.pass = true;
  for (const SmallInstance& inst : MakeRatioInstances(options.instance_seed)) {
    const SetFunction& f = *inst.objective;
    double total = 0.0;
    for (double c : inst.costs) total += c;
    const KnapsackInstance instance(inst.costs, inst.budget_fraction * total);
    const ExactOptimum opt = BruteForceOpt(f, instance);

    RatioInstanceReport r;
    r.label = inst.label;
    r.n = f.n();
    r.budget_fraction = inst.budget_fraction;
    r.opt = opt.value;
    std::vector<double> ratios;
    for (std::size_t seed = 0; seed < options.seeds; ++seed) {
      AstConfig config = options.config;
      config.seed = seed;
      CountingOracle oracle(f);
      const AstResult result = RunAst(oracle, instance, config);
      for (auto& v : CheckAstInvariants(f, instance, result, oracle.ledger())) {
        r.violations.push_back("seed " + std::to_string(seed) + ": " + v);
      }
      const double value = f.Value(result.solution);
      if (value > opt.value + 1e-9 * std::max(1.0, opt.value)) {
        r.violations.push_back("seed " + std::to_string(seed) +
                               ": beats the brute-force optimum");
      }
      ratios.push_back(opt.value > 0.0 ? value / opt.value : 1.0);
    }
    r.ratio = Summarize(ratios);
    r.pass = r.ratio.LowerBound() >= report.target && r.violations.empty();
    report.pass = report.pass && r.pass;
    report.instances.push_back(std::move(r));
  }
  return report;
}

RoundsSuiteReport RunRoundsSuite(const RoundsSuiteOptions& options) {
  RoundsSuiteReport report;
  std::vector<double> log_n;
  std::vector<double> rounds;
  bool clean = true;
  for (std::size_t n : options.sizes) {
    const double p = std::min(1.0, options.expected_degree / static_cast<double>(n - 1));
    RandomGraph g = GenerateErdosRenyi(n, p, options.instance_seed + n);
    const CutObjective f(std::move(g.graph));
    double total = 0.0;
    for (double c : g.node_costs) total += c;
    const KnapsackInstance instance(g.node_costs, options.budget_fraction * total);

    RoundsPoint point;
    point.n = n;
    for (std::size_t seed = 0; seed < options.seeds; ++seed) {
      AstConfig config = options.config;
      config.seed = seed;
      CountingOracle oracle(f);
      const AstResult result = RunAst(oracle, instance, config);
      for (auto& v : CheckAstInvariants(f, instance, result, oracle.ledger())) {
        point.violations.push_back(v);
      }
      point.mean_ast_rounds += static_cast<double>(result.ast_ledger.adaptive_rounds);
      point.mean_estimator_rounds +=
          static_cast<double>(result.estimator_ledger.adaptive_rounds);
      point.mean_boost_prefix_rounds += static_cast<double>(result.boost_prefix_rounds);
    }
    const double k = static_cast<double>(options.seeds);
    point.mean_ast_rounds /= k;
    point.mean_estimator_rounds /= k;
    point.mean_boost_prefix_rounds /= k;
    clean = clean && point.violations.empty();
    log_n.push_back(std::log(static_cast<double>(n)));
    rounds.push_back(point.mean_ast_rounds);
    report.points.push_back(std::move(point));
  }
  report.fit = FitLine(log_n, rounds);
  report.growth = rounds.back() / rounds.front();
  report.growth_limit = 2.0 * log_n.back() / log_n.front();
  report.pass = clean && report.fit.r_squared >= 0.9 &&
                report.growth <= report.growth_limit;
  return report;
}

}  // namespace smk
