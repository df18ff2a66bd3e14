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

#include "smk/core/counting_oracle.h"

#include <string>

#include "smk/core/errors.h"

namespace smk {

void CountingOracle::CheckIds(std::span<const ElementId> ids) const {
  for (ElementId e : ids) {
    if (e >= f_.n()) {
      throw DomainError("element id " + std::to_string(e) +
                        " out of range for n=" + std::to_string(f_.n()));
    }
  }
}

void CountingOracle::Charge(std::uint64_t queries) {
  ledger_.total_queries += queries;
  ledger_.adaptive_rounds += 1;
}

double CountingOracle::Evaluate(const ElementSet& s) {
  CheckIds(s.members());
  const double value = f_.Value(s);
  Charge(1);
  return value;
}

std::vector<double> CountingOracle::EvaluateBatch(
    std::span<const ElementSet> sets) {
  if (sets.empty()) {
    throw ContractError("an adaptive round must contain at least one query");
  }
  for (const ElementSet& s : sets) CheckIds(s.members());
  std::vector<double> values;
  values.reserve(sets.size());
  for (const ElementSet& s : sets) values.push_back(f_.Value(s));
  Charge(sets.size());
  return values;
}

Marginals CountingOracle::MarginalBatch(const ElementSet& base,
                                        std::span<const ElementId> candidates) {
  CheckIds(base.members());
  CheckIds(candidates);
  Marginals out;
  auto state = f_.NewState();
  for (ElementId e : base) state->Add(e);
  out.base_value = state->value();
  out.gains.reserve(candidates.size());
  for (ElementId e : candidates) {
    out.gains.push_back(base.Contains(e) ? 0.0 : state->Gain(e));
  }
  Charge(candidates.size() + 1);
  return out;
}

PrefixSweep CountingOracle::SweepPrefixes(const ElementSet& base,
                                          std::span<const ElementId> sequence,
                                          std::span<const ElementId> candidates,
                                          std::size_t first_row) {
  CheckIds(base.members());
  CheckIds(sequence);
  CheckIds(candidates);
  const std::size_t depth = sequence.size();
  if (first_row > depth + 1) {
    throw ContractError("first_row exceeds the number of prefixes");
  }
  PrefixSweep out;
  out.first_row = first_row;
  out.width = candidates.size();
  out.prefix_values.reserve(depth + 1);
  out.gains.reserve((depth + 1 - first_row) * candidates.size());

  auto state = f_.NewState();
  ElementSet current = base;
  for (ElementId e : base) state->Add(e);
  out.prefix_values.push_back(state->value());
  for (std::size_t i = 0;; ++i) {
    if (i >= first_row) {
      for (ElementId u : candidates) {
        out.gains.push_back(current.Contains(u) ? 0.0 : state->Gain(u));
      }
    }
    if (i == depth) break;
    state->Add(sequence[i]);
    current.Insert(sequence[i]);
    out.prefix_values.push_back(state->value());
  }
  Charge((depth + 1) + (depth + 1 - first_row) * candidates.size());
  return out;
}

}  // namespace smk
