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

#ifndef SMK_CORE_COUNTING_ORACLE_H_
#define SMK_CORE_COUNTING_ORACLE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "smk/core/element_set.h"
#include "smk/core/set_function.h"

namespace smk {

// Query and adaptive-round counters. A round is one batch of independent
// queries; a query is one set evaluation.
struct QueryLedger {
  std::uint64_t total_queries = 0;
  std::uint64_t adaptive_rounds = 0;

  friend QueryLedger operator-(const QueryLedger& a, const QueryLedger& b) {
    return {a.total_queries - b.total_queries,
            a.adaptive_rounds - b.adaptive_rounds};
  }
  friend QueryLedger operator+(const QueryLedger& a, const QueryLedger& b) {
    return {a.total_queries + b.total_queries,
            a.adaptive_rounds + b.adaptive_rounds};
  }
  friend bool operator==(const QueryLedger&, const QueryLedger&) = default;
};

struct Marginals {
  double base_value = 0.0;   // f(base)
  std::vector<double> gains; // f(e | base), one per candidate
};

// Values of every prefix of a sequence appended to a base set, plus the gain
// of each candidate against each prefix from `first_row` on.
struct PrefixSweep {
  // prefix_values[i] = f(base + v_1..v_i), i = 0..d.
  std::vector<double> prefix_values;
  std::size_t first_row = 0;
  std::size_t width = 0;
  // Row-major; row r holds f(u | base + v_1..v_{first_row + r}).
  std::vector<double> gains;

  std::size_t depth() const { return prefix_values.size() - 1; }
  double gain(std::size_t prefix, std::size_t candidate) const {
    return gains[(prefix - first_row) * width + candidate];
  }
};

// Wraps a SetFunction and charges every evaluation to a ledger. Each public
// call is one adaptive round; the ledger is updated once the whole batch has
// been answered, so counts never depend on evaluation order.
class CountingOracle {
 public:
  explicit CountingOracle(const SetFunction& f) : f_(f) {}

  const SetFunction& function() const { return f_; }
  std::size_t n() const { return f_.n(); }
  const QueryLedger& ledger() const { return ledger_; }

  // One round, one query.
  double Evaluate(const ElementSet& s);

  // One round, |sets| queries. Throws ContractError on an empty batch.
  std::vector<double> EvaluateBatch(std::span<const ElementSet> sets);

  // f(e | base) for every candidate: one round, |candidates| + 1 queries.
  Marginals MarginalBatch(const ElementSet& base,
                          std::span<const ElementId> candidates);

  // For every prefix V_i = v_1..v_i (i = 0..d) of `sequence`: f(base + V_i),
  // and for i >= first_row, f(u | base + V_i) for every candidate u.
  // One round; (d + 1) + (d + 1 - first_row) * |candidates| queries.
  PrefixSweep SweepPrefixes(const ElementSet& base,
                            std::span<const ElementId> sequence,
                            std::span<const ElementId> candidates,
                            std::size_t first_row = 0);

 private:
  void CheckIds(std::span<const ElementId> ids) const;
  void Charge(std::uint64_t queries);

  const SetFunction& f_;
  QueryLedger ledger_;
};

}  // namespace smk

#endif  // SMK_CORE_COUNTING_ORACLE_H_
