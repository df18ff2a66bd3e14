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

#ifndef SMK_HARNESS_SUITES_H_
#define SMK_HARNESS_SUITES_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "smk/ast/ast.h"
#include "smk/core/counting_oracle.h"
#include "smk/core/knapsack_instance.h"
#include "smk/core/set_function.h"
#include "smk/harness/stats.h"

namespace smk {

// Structural checks on one finished AST run: feasibility of the solution and
// of every recorded candidate, X and Y disjoint, the solution value being the
// max of the recorded candidates, the reported value matching a from-scratch
// evaluation, and the estimator/AST ledger split adding up to `total`.
// Returns one message per violation.
std::vector<std::string> CheckAstInvariants(const SetFunction& f,
                                            const KnapsackInstance& instance,
                                            const AstResult& result,
                                            const QueryLedger& total);

// A small instance with its exact optimum.
struct SmallInstance {
  std::string label;
  std::shared_ptr<const SetFunction> objective;
  std::vector<double> costs;
  double budget_fraction = 0.0;
};

// Twelve brute-forceable instances: cut, revenue and modular + cut mixture
// objectives at n in {10, 12, 14} and budget fractions in {0.2, 0.4, 0.6}.
std::vector<SmallInstance> MakeRatioInstances(std::uint64_t seed);

struct RatioSuiteOptions {
  std::size_t seeds = 200;
  AstConfig config;
  std::uint64_t instance_seed = 7;
};

struct RatioInstanceReport {
  std::string label;
  std::size_t n = 0;
  double budget_fraction = 0.0;
  double opt = 0.0;
  Summary ratio;          // f(S) / OPT over seeds
  bool pass = false;      // lower 99% bound on the mean ratio >= target
  std::vector<std::string> violations;
};

struct RatioSuiteReport {
  double target = 0.0;  // 1/7 - eps
  std::vector<RatioInstanceReport> instances;
  bool pass = false;
};

RatioSuiteReport RunRatioSuite(const RatioSuiteOptions& options);

struct RoundsSuiteOptions {
  std::vector<std::size_t> sizes{64, 256, 1024, 4096};
  // Expected degree of the G(n, p) graphs; p = degree / (n - 1).
  double expected_degree = 16.0;
  double budget_fraction = 0.1;
  std::size_t seeds = 3;
  AstConfig config;
  std::uint64_t instance_seed = 11;
};

struct RoundsPoint {
  std::size_t n = 0;
  double mean_ast_rounds = 0.0;
  double mean_estimator_rounds = 0.0;
  double mean_boost_prefix_rounds = 0.0;
  std::vector<std::string> violations;
};

struct RoundsSuiteReport {
  std::vector<RoundsPoint> points;
  LinearFit fit;           // mean AST rounds against ln n
  double growth = 0.0;     // rounds(largest) / rounds(smallest)
  double growth_limit = 0.0;
  bool pass = false;       // R^2 >= 0.9, growth <= limit, no violations
};

RoundsSuiteReport RunRoundsSuite(const RoundsSuiteOptions& options);

}  // namespace smk

#endif  // SMK_HARNESS_SUITES_H_
