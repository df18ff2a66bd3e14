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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "smk/ast/ast.h"
#include "smk/baselines/baselines.h"
#include "smk/core/counting_oracle.h"
#include "smk/harness/experiment.h"
#include "smk/harness/stats.h"
#include "smk/harness/suites.h"
#include "smk/objectives/generators.h"
#include "smk/objectives/objectives.h"
#include "smk/randbatch/rand_batch.h"
#include "smk/unsubmax/unsub_max.h"
#include "testing/fixtures.h"

namespace smk {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Violations collected from every suite; criterion 7 reports them.
std::vector<std::string> g_violations;
std::size_t g_runs_checked = 0;
std::size_t g_boost_runs = 0;
std::size_t g_boost_bad = 0;

void RecordRun(const SetFunction& f, const KnapsackInstance& inst,
               const AstResult& r, const QueryLedger& total, const std::string& where) {
  ++g_runs_checked;
  for (auto& v : CheckAstInvariants(f, inst, r, total)) {
    g_violations.push_back(where + ": " + v);
  }
  if (!r.trivial) {
    ++g_boost_runs;
    if (r.boost_prefix_rounds != 2) ++g_boost_bad;
  }
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome ApproximationRatio() {
  const auto start = std::chrono::steady_clock::now();
  RatioSuiteOptions options;
  options.seeds = 200;
  const RatioSuiteReport report = RunRatioSuite(options);
  double worst = 1e300, lowest_mean = 1e300;
  for (const auto& r : report.instances) {
    worst = std::min(worst, r.ratio.LowerBound());
    lowest_mean = std::min(lowest_mean, r.ratio.mean);
    for (const auto& v : r.violations) g_violations.push_back(r.label + ": " + v);
    g_runs_checked += r.ratio.count;
  }
  const double secs = Seconds(start);
  return {report.pass && secs <= 600.0,
          fmt::format("{} instances x {} seeds; lowest mean ratio {:.4f}, lowest "
                      "99% lower bound {:.4f} vs target {:.5f}; {:.1f}s",
                      report.instances.size(), options.seeds, lowest_mean, worst,
                      report.target, secs)};
}

// Shared trials for the two RandBatch expectation checks.
struct BatchTrials {
  double eps = 0.1;
  std::vector<double> thresholds;
  // [level] -> per-trial f(A) - (1-eps)^2 theta c(A)
  std::vector<std::vector<double>> whole;
  // [level][position] -> per-sample f(a_i | A_{i-1}) - (1-eps)^2 theta c(a_i)
  std::vector<std::map<std::size_t, std::vector<double>>> per_position;
  double seconds = 0.0;
};

const BatchTrials& RunBatchTrials() {
  static const BatchTrials trials = [] {
    const auto start = std::chrono::steady_clock::now();
    BatchTrials t;
    const RandomGraph g = GenerateErdosRenyi(30, 0.3, 2024);
    const CutObjective f(g.graph);
    double total = 0.0;
    for (double c : g.node_costs) total += c;
    const KnapsackInstance inst(g.node_costs, 0.4 * total);
    double top = 0.0;
    for (ElementId e = 0; e < 30; ++e) {
      top = std::max(top, f.Value(ElementSet{e}) / inst.cost(e));
    }
    ElementSet pool;
    for (ElementId e = 0; e < 30; ++e) pool.Insert(e);
    const double shrink = (1 - t.eps) * (1 - t.eps);
    for (double level : {0.5, 0.2, 0.05}) {
      const double theta = level * top;
      t.thresholds.push_back(theta);
      std::vector<double> whole;
      std::map<std::size_t, std::vector<double>> positions;
      for (std::uint64_t seed = 0; seed < 400; ++seed) {
        CountingOracle oracle(f);
        std::mt19937_64 rng(seed);
        RandBatchParams p;
        p.threshold = theta;
        p.max_count = 3950;
        p.epsilon = t.eps;
        const RandBatchOutput out = RandBatch(oracle, inst, ElementSet{}, pool, p, rng);
        whole.push_back(f.Value(out.accepted) - shrink * theta * inst.Cost(out.accepted));
        ElementSet prefix;
        double before = 0.0;
        for (std::size_t i = 0; i < out.accepted.size(); ++i) {
          const ElementId a = out.accepted[i];
          prefix.Insert(a);
          const double after = f.Value(prefix);
          positions[i + 1].push_back(after - before - shrink * theta * inst.cost(a));
          before = after;
        }
      }
      t.whole.push_back(std::move(whole));
      t.per_position.push_back(std::move(positions));
    }
    t.seconds = Seconds(start);
    return t;
  }();
  return trials;
}

Outcome BatchValuePerCost() {
  const BatchTrials& t = RunBatchTrials();
  bool pass = t.seconds <= 120.0;
  std::string detail;
  for (std::size_t l = 0; l < t.thresholds.size(); ++l) {
    const Summary s = Summarize(t.whole[l]);
    // Not rejected at 99%: the upper confidence bound of the gap is >= 0.
    pass = pass && s.UpperBound() >= 0.0;
    detail += fmt::format("theta={:.3g}: mean gap {:.4g} (ucb {:.4g}); ",
                          t.thresholds[l], s.mean, s.UpperBound());
  }
  return {pass, detail + fmt::format("{} trials per level; {:.1f}s",
                                     t.whole.front().size(), t.seconds)};
}

Outcome BatchPerPosition() {
  const BatchTrials& t = RunBatchTrials();
  bool pass = true;
  std::size_t checked = 0;
  double worst = 1e300;
  for (std::size_t l = 0; l < t.thresholds.size(); ++l) {
    for (const auto& [pos, gaps] : t.per_position[l]) {
      if (gaps.size() < 30) continue;
      const Summary s = Summarize(gaps);
      ++checked;
      worst = std::min(worst, s.UpperBound());
      pass = pass && s.UpperBound() >= 0.0;
    }
  }
  return {pass && checked > 0,
          fmt::format("{} (level, position) cells with >= 30 samples; smallest "
                      "upper bound of the per-position gap {:.4g}",
                      checked, worst)};
}

Outcome RoundsShape() {
  const auto start = std::chrono::steady_clock::now();
  RoundsSuiteOptions options;
  const RoundsSuiteReport report = RunRoundsSuite(options);
  std::string points;
  for (const auto& p : report.points) {
    points += fmt::format("n={}:{:.1f} ", p.n, p.mean_ast_rounds);
    for (const auto& v : p.violations) g_violations.push_back("rounds n=" + std::to_string(p.n) + ": " + v);
    g_runs_checked += options.seeds;
    g_boost_runs += options.seeds;
    if (p.mean_boost_prefix_rounds != 2.0) ++g_boost_bad;
  }
  const double secs = Seconds(start);
  return {report.pass && secs <= 900.0,
          fmt::format("{}; fit {:.2f} ln n + {:.2f}, R^2={:.4f}; "
                      "rounds(max)/rounds(min)={:.2f} (limit {:.2f}); {:.1f}s",
                      points, report.fit.slope, report.fit.intercept,
                      report.fit.r_squared, report.growth, report.growth_limit, secs)};
}

Outcome BoostRounds() {
  // Extra runs across sizes, budgets and objectives, on top of the runs the
  // other suites recorded.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 20 + 10 * (seed % 5);
    const RandomGraph g = GenerateErdosRenyi(n, 0.3, 500 + seed);
    const double frac = 0.05 + 0.1 * static_cast<double>(seed % 4);
    std::shared_ptr<const SetFunction> f;
    std::vector<double> costs = g.node_costs;
    if (seed % 2 == 0) {
      f = std::make_shared<CutObjective>(g.graph);
    } else {
      costs = RevenueCosts(g.graph);
      f = std::make_shared<RevenueObjective>(g.graph);
    }
    double total = 0.0;
    for (double c : costs) total += c;
    const KnapsackInstance inst(costs, frac * total);
    AstConfig config;
    config.seed = seed;
    CountingOracle oracle(*f);
    const AstResult r = RunAst(oracle, inst, config);
    RecordRun(*f, inst, r, oracle.ledger(), "boost seed " + std::to_string(seed));
  }
  return {g_boost_bad == 0 && g_boost_runs > 0,
          fmt::format("{} non-trivial runs, {} with a prefix phase other than 2 rounds",
                      g_boost_runs, g_boost_bad)};
}

Outcome ParameterFormulas() {
  const GuessGrid grid = GuessCounts(1.0 / 7.0, 0.1, 0.12);
  return {grid.guesses == 77 && grid.max_count == 3950,
          fmt::format("Delta={} M={}", grid.guesses, grid.max_count)};
}

Outcome Invariants() {
  // Batch versus sequential evaluation on random sets.
  std::size_t mismatches = 0;
  const RandomGraph g = GenerateErdosRenyi(40, 0.3, 31);
  const CutObjective f(g.graph);
  std::mt19937_64 rng(5);
  std::vector<ElementSet> sets;
  for (int i = 0; i < 200; ++i) sets.push_back(testing::RandomSubset(40, rng));
  CountingOracle batch(f), single(f);
  const std::vector<double> values = batch.EvaluateBatch(sets);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (values[i] != single.Evaluate(sets[i])) ++mismatches;
  }
  const bool ledgers = batch.ledger() == QueryLedger{200, 1} &&
                       single.ledger() == QueryLedger{200, 200};
  std::string first = g_violations.empty() ? "" : "; first: " + g_violations.front();
  return {g_violations.empty() && mismatches == 0 && ledgers,
          fmt::format("{} runs checked, {} violations; batch/sequential mismatches {}; "
                      "ledger counts {}{}",
                      g_runs_checked, g_violations.size(), mismatches,
                      ledgers ? "ok" : "wrong", first)};
}

Outcome ObjectiveCorrectness() {
  const std::size_t n = 30;
  RandomGraph g1 = GenerateErdosRenyi(n, 0.3, 61);
  RandomGraph g2 = GenerateErdosRenyi(n, 0.3, 62);
  const std::vector<std::shared_ptr<const SetFunction>> fs{
      std::make_shared<RevenueObjective>(g1.graph),
      std::make_shared<CutObjective>(g2.graph),
      std::make_shared<ImageSummarizationObjective>(
          SimilarityMatrix::FromFeatures(GenerateFeatures(n, 32, 63)))};
  std::size_t triples = 0, sub_bad = 0, inc_sets = 0, inc_bad = 0, empty_bad = 0;
  std::mt19937_64 rng(64);
  std::uniform_int_distribution<ElementId> pick(0, n - 1);
  for (const auto& f : fs) {
    if (f->Value(ElementSet{}) != 0.0) ++empty_bad;
    for (int k = 0; k < 600;) {
      const ElementSet b = testing::RandomSubset(n, rng);
      ElementSet a;
      for (ElementId e : b) {
        if (rng() & 1) a.Insert(e);
      }
      const ElementId e = pick(rng);
      if (b.Contains(e)) continue;
      ElementSet ae = a, be = b;
      ae.Insert(e);
      be.Insert(e);
      if (f->Value(ae) - f->Value(a) < f->Value(be) - f->Value(b) - 1e-9) ++sub_bad;
      ++triples;
      ++k;
    }
    for (int k = 0; k < 1000; ++k) {
      const ElementSet s = testing::RandomSubset(n, rng);
      auto state = f->NewState();
      for (ElementId e : s) state->Add(e);
      const double naive = f->Value(s);
      if (std::abs(state->value() - naive) > 1e-9 * std::max(1.0, std::abs(naive))) ++inc_bad;
      ++inc_sets;
    }
  }
  // Hand-computed examples.
  const RevenueObjective star(testing::Star());
  const CutObjective tri(testing::UnitTriangle());
  const CutObjective path(testing::UnitPath());
  const ImageSummarizationObjective two(SimilarityMatrix(2, {1, 1, 1, 1}));
  const ImageSummarizationObjective one(SimilarityMatrix(1, {1}));
  const WeightedGraph unit_degree(2, {{0, 1, 1.0}});
  const bool hand = std::abs(star.Value(ElementSet{0}) - 6.0) < 1e-12 &&
                    star.Value(ElementSet{0, 1, 2, 3}) == 0.0 &&
                    tri.Value(ElementSet{0}) == 2.0 &&
                    tri.Value(ElementSet{0, 1, 2}) == 0.0 &&
                    path.Value(ElementSet{1}) == 2.0 &&
                    std::abs(two.Value(ElementSet{0}) - 1.0) < 1e-12 &&
                    std::abs(one.Value(ElementSet{0})) < 1e-12 &&
                    std::abs(RevenueCosts(unit_degree)[0] - 0.63212) < 1e-5;
  return {sub_bad == 0 && inc_bad == 0 && empty_bad == 0 && hand,
          fmt::format("{} submodularity triples ({} bad), {} incremental sets ({} bad), "
                      "f(empty)!=0 on {}, hand examples {}",
                      triples, sub_bad, inc_sets, inc_bad, empty_bad, hand ? "ok" : "wrong")};
}

Outcome QuarterBound() {
  bool pass = true;
  std::string detail;
  for (std::uint64_t inst = 0; inst < 4; ++inst) {
    const RandomGraph g = GenerateErdosRenyi(12, 0.5, 90 + inst);
    std::shared_ptr<const SetFunction> f;
    if (inst % 2 == 0) {
      f = std::make_shared<CutObjective>(g.graph);
    } else {
      f = std::make_shared<RevenueObjective>(g.graph);
    }
    const double opt = BruteForceUnconstrained(*f).value;
    ElementSet ground;
    for (ElementId e = 0; e < 12; ++e) ground.Insert(e);
    std::vector<double> values;
    bool one_round = true;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      CountingOracle oracle(*f);
      std::mt19937_64 rng(seed);
      values.push_back(UnSubMax(oracle, ground, 10, rng).value);
      one_round = one_round && oracle.ledger().adaptive_rounds == 1;
    }
    const Summary s = Summarize(values);
    pass = pass && one_round && s.UpperBound() >= 0.25 * opt;
    detail += fmt::format("{}: mean {:.3f} vs OPT/4 {:.3f}{}; ", f->name(), s.mean,
                          0.25 * opt, one_round ? "" : " (extra rounds)");
  }
  return {pass, detail + "200 seeds each"};
}

Outcome DeskScaleSweep() {
  const auto start = std::chrono::steady_clock::now();
  ExperimentSpec spec;
  spec.objective = ObjectiveKind::kCut;
  spec.source = GeneratedSource{500, 0.2, 1, 64};
  spec.budget_fractions.clear();
  for (int i = 1; i <= 10; ++i) spec.budget_fractions.push_back(0.02 * i);
  spec.trials = 3;
  spec.record_timing = false;
  const Problem problem = BuildProblem(spec);
  spec.algorithm = Algorithm::kAst;
  const auto ast = RunExperiment(spec, problem);
  spec.algorithm = Algorithm::kDensityGreedy;
  const auto greedy = RunExperiment(spec, problem);

  std::map<double, double> ast_value, greedy_value, ast_rounds, greedy_rounds;
  for (const auto& r : ast) {
    ast_value[r.budget_fraction] += r.f_value / spec.trials;
    ast_rounds[r.budget_fraction] += static_cast<double>(r.adaptive_rounds_ast) / spec.trials;
  }
  for (const auto& r : greedy) {
    greedy_value[r.budget_fraction] += r.f_value / spec.trials;
    greedy_rounds[r.budget_fraction] +=
        static_cast<double>(r.adaptive_rounds_ast) / spec.trials;
  }
  // Invariant and round checks on the same instance at every budget.
  const KnapsackInstance full(problem.costs, 1.0);
  for (double frac : spec.budget_fractions) {
    const KnapsackInstance inst(problem.costs, frac * full.TotalCost());
    AstConfig config;
    config.seed = 0;
    CountingOracle oracle(*problem.objective);
    const AstResult r = RunAst(oracle, inst, config);
    RecordRun(*problem.objective, inst, r, oracle.ledger(),
              fmt::format("sweep fraction {}", frac));
  }

  std::size_t wins = 0;
  for (const auto& [frac, v] : ast_value) {
    if (v >= greedy_value[frac]) ++wins;
  }
  const double largest = ast_value.rbegin()->first;
  const bool value_ok = 2 * wins >= ast_value.size();
  const bool rounds_ok = ast_rounds[largest] <= greedy_rounds[largest];
  return {value_ok && rounds_ok,
          fmt::format("AST >= greedy on {}/{} budgets (at 0.20: {:.1f} vs {:.1f}); "
                      "rounds at 0.20: AST {:.1f} vs greedy {:.1f}; {:.1f}s",
                      wins, ast_value.size(), ast_value[largest], greedy_value[largest],
                      ast_rounds[largest], greedy_rounds[largest], Seconds(start))};
}

}  // namespace
}  // namespace smk

int main() {
  using smk::Outcome;
  // Criterion 7 reports violations gathered by the suites that run before it.
  const std::vector<std::pair<int, std::function<Outcome()>>> order{
      {1, smk::ApproximationRatio},   {2, smk::BatchValuePerCost},
      {3, smk::BatchPerPosition}, {4, smk::RoundsShape},
      {6, smk::ParameterFormulas},
      {8, smk::ObjectiveCorrectness}, {9, smk::QuarterBound},
      {10, smk::DeskScaleSweep}, {5, smk::BoostRounds}, {7, smk::Invariants}};
  const char* names[] = {"",
                         "approximation ratio on brute-forced instances",
                         "RandBatch value per unit cost",
                         "RandBatch per-position marginal value",
                         "adaptive rounds grow logarithmically",
                         "prefix augmentation takes two rounds",
                         "guess count and batch cap",
                         "structural invariants",
                         "objective correctness",
                         "UnSubMax quarter bound",
                         "desk-scale cut sweep vs density greedy"};
  std::map<int, Outcome> results;
  for (const auto& [id, check] : order) results[id] = check();
  int failed = 0;
  for (const auto& [id, r] : results) {
    fmt::print("{} criterion {}: {} ({})\n", r.pass ? "PASS" : "FAIL", id, names[id],
               r.detail);
    if (!r.pass) ++failed;
  }
  fmt::print("{} of {} criteria passed\n", results.size() - failed, results.size());
  return failed == 0 ? 0 : 1;
}
