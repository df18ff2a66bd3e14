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

// Command-line front end: run single experiments, budget sweeps, and the two
// self-checking suites (`verify`, `bench-rounds`) that exit nonzero on
// failure.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "smk/core/errors.h"
#include "smk/harness/experiment.h"
#include "smk/harness/report.h"
#include "smk/harness/suites.h"

namespace {

struct Options {
  std::string algorithm = "ast";
  std::string objective = "cut";
  std::string graph;
  std::string features;
  std::size_t gen_n = 200;
  double gen_p = 0.2;
  std::size_t feature_dim = 64;
  std::vector<double> budget_fracs = smk::ExperimentSpec::DefaultBudgetFractions();
  std::size_t trials = 1;
  double epsilon = 0.1;
  double delta = 0.12;
  double alpha = 1.0 / 7.0;
  std::uint64_t seed = 1;
  std::string out_csv;
  std::string out_svg;
  std::string svg_axis = "value";
  std::string estimator = "greedy";
  std::string revenue_cost = "one_minus_exp_neg";
  bool no_timing = false;
  std::size_t suite_seeds = 0;
  std::vector<std::size_t> sizes{64, 256, 1024, 4096};
};

std::vector<std::string> SplitList(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

smk::AstConfig MakeConfig(const Options& o) {
  smk::AstConfig config;
  config.alpha = o.alpha;
  config.epsilon = o.epsilon;
  config.delta = o.delta;
  config.seed = o.seed;
  if (o.estimator == "greedy") {
    config.estimator = smk::EstimatorKind::kDensityGreedy;
  } else if (o.estimator == "singleton") {
    config.estimator = smk::EstimatorKind::kBestSingleton;
  } else {
    throw smk::ParameterError("unknown estimator '" + o.estimator + "'");
  }
  return config;
}

smk::ExperimentSpec MakeSpec(const Options& o, smk::Algorithm algorithm,
                             smk::ObjectiveKind objective) {
  smk::ExperimentSpec spec;
  spec.algorithm = algorithm;
  spec.objective = objective;
  const std::string& file =
      objective == smk::ObjectiveKind::kImageSumm ? o.features : o.graph;
  if (!file.empty()) {
    spec.source = smk::FileSource{file, o.seed};
  } else {
    spec.source = smk::GeneratedSource{o.gen_n, o.gen_p, o.seed, o.feature_dim};
  }
  spec.budget_fractions = o.budget_fracs;
  spec.trials = o.trials;
  spec.config = MakeConfig(o);
  if (o.revenue_cost == "one_minus_exp_neg") {
    spec.revenue_rule = smk::RevenueCostRule::kOneMinusExpNeg;
  } else if (o.revenue_cost == "exp_minus_one") {
    spec.revenue_rule = smk::RevenueCostRule::kExpMinusOne;
  } else {
    throw smk::ParameterError("unknown revenue cost rule '" + o.revenue_cost + "'");
  }
  spec.record_timing = !o.no_timing;
  return spec;
}

void Emit(const std::vector<smk::ExperimentRecord>& records, const Options& o) {
  if (o.out_csv.empty()) {
    smk::WriteCsv(records, std::cout);
  } else {
    smk::WriteCsv(records, std::filesystem::path(o.out_csv));
  }
  if (!o.out_svg.empty()) {
    smk::PlotAxis axis;
    if (o.svg_axis == "value") {
      axis = smk::PlotAxis::kValue;
    } else if (o.svg_axis == "rounds") {
      axis = smk::PlotAxis::kRounds;
    } else {
      throw smk::ParameterError("--svg-axis must be value or rounds");
    }
    smk::WriteSvgPlot(records, axis, std::filesystem::path(o.out_svg));
  }
}

int Run(const Options& o) {
  const auto spec = MakeSpec(o, smk::ParseAlgorithm(o.algorithm),
                             smk::ParseObjective(o.objective));
  Emit(smk::RunExperiment(spec), o);
  return 0;
}

int Sweep(const Options& o) {
  std::vector<smk::ExperimentRecord> all;
  for (const std::string& obj : SplitList(o.objective)) {
    const smk::ObjectiveKind objective = smk::ParseObjective(obj);
    std::optional<smk::Problem> problem;
    for (const std::string& alg : SplitList(o.algorithm)) {
      const auto spec = MakeSpec(o, smk::ParseAlgorithm(alg), objective);
      if (!problem) problem = smk::BuildProblem(spec);
      auto records = smk::RunExperiment(spec, *problem);
      all.insert(all.end(), records.begin(), records.end());
    }
  }
  Emit(all, o);
  return 0;
}

int Verify(const Options& o) {
  smk::RatioSuiteOptions options;
  options.config = MakeConfig(o);
  if (o.suite_seeds > 0) options.seeds = o.suite_seeds;
  const smk::RatioSuiteReport report = smk::RunRatioSuite(options);
  std::cout << fmt::format("target mean ratio >= {:.5f} (lower 99% bound)\n",
                           report.target);
  for (const auto& r : report.instances) {
    std::cout << fmt::format(
        "{} {:<24} OPT={:<10.5g} mean={:.4f} lcb={:.4f} min={:.4f} runs={}\n",
        r.pass ? "PASS" : "FAIL", r.label, r.opt, r.ratio.mean,
        r.ratio.LowerBound(), r.ratio.min, r.ratio.count);
    for (const auto& v : r.violations) std::cout << "    " << v << '\n';
  }
  std::cout << (report.pass ? "verify: PASS\n" : "verify: FAIL\n");
  return report.pass ? 0 : 1;
}

int BenchRounds(const Options& o) {
  smk::RoundsSuiteOptions options;
  options.config = MakeConfig(o);
  options.sizes = o.sizes;
  if (o.suite_seeds > 0) options.seeds = o.suite_seeds;
  const smk::RoundsSuiteReport report = smk::RunRoundsSuite(options);
  for (const auto& p : report.points) {
    std::cout << fmt::format(
        "n={:<6} ast_rounds={:<9.2f} estimator_rounds={:<9.2f} "
        "prefix_rounds={:.0f}\n",
        p.n, p.mean_ast_rounds, p.mean_estimator_rounds,
        p.mean_boost_prefix_rounds);
    for (const auto& v : p.violations) std::cout << "    " << v << '\n';
  }
  std::cout << fmt::format(
      "fit rounds = {:.3f} ln n + {:.3f}, R^2 = {:.4f}; growth {:.3f} (limit "
      "{:.3f})\n",
      report.fit.slope, report.fit.intercept, report.fit.r_squared,
      report.growth, report.growth_limit);
  std::cout << (report.pass ? "bench-rounds: PASS\n" : "bench-rounds: FAIL\n");
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knapsack-constrained non-monotone submodular maximization"};
  app.set_config("--config", "", "flat key = value file; flags override it");
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--algorithm", o.algorithm,
                 "ast | density_greedy | random_feasible (comma list for sweep)");
  app.add_option("--objective", o.objective,
                 "revenue | cut | image_summ (comma list for sweep)");
  app.add_option("--graph", o.graph, "edge-list file for revenue/cut");
  app.add_option("--features", o.features, "feature CSV for image_summ");
  app.add_option("--gen-n", o.gen_n, "generated instance size");
  app.add_option("--gen-p", o.gen_p, "generated G(n, p) edge probability");
  app.add_option("--feature-dim", o.feature_dim, "generated feature length");
  app.add_option("--budget-fracs", o.budget_fracs, "budget fractions of total cost")
      ->delimiter(',');
  app.add_option("--trials", o.trials, "trials per budget");
  app.add_option("--epsilon", o.epsilon);
  app.add_option("--delta", o.delta);
  app.add_option("--alpha", o.alpha);
  app.add_option("--seed", o.seed);
  app.add_option("--out-csv", o.out_csv, "CSV output (default stdout)");
  app.add_option("--out-svg", o.out_svg, "SVG plot output");
  app.add_option("--svg-axis", o.svg_axis, "value | rounds");
  app.add_option("--estimator", o.estimator, "greedy | singleton");
  app.add_option("--revenue-cost", o.revenue_cost,
                 "one_minus_exp_neg | exp_minus_one");
  app.add_flag("--no-timing", o.no_timing, "write wall_ms as 0");
  app.add_option("--suite-seeds", o.suite_seeds, "seeds per point for verify/bench-rounds");
  app.add_option("--sizes", o.sizes, "instance sizes for bench-rounds")->delimiter(',');

  auto* run = app.add_subcommand("run", "one algorithm on one objective");
  auto* sweep = app.add_subcommand("sweep", "algorithms x objectives x budgets");
  auto* verify = app.add_subcommand("verify", "small-instance ratio suite vs brute force");
  auto* bench = app.add_subcommand("bench-rounds", "adaptive-round scaling suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return Run(o);
    if (sweep->parsed()) return Sweep(o);
    if (verify->parsed()) return Verify(o);
    if (bench->parsed()) return BenchRounds(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
