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

#ifndef SMK_CORE_SET_FUNCTION_H_
#define SMK_CORE_SET_FUNCTION_H_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "smk/core/element_set.h"

namespace smk {

class SetFunction;

// Scratch state holding a current set S, answering f(S + e) - f(S) quickly.
// States are owned by one caller; the function they came from stays const.
class IncrementalState {
 public:
  virtual ~IncrementalState() = default;

  // f(S).
  virtual double value() const = 0;
  // f(S + e) - f(S); 0 when e is already in S.
  virtual double Gain(ElementId e) const = 0;
  // S <- S + e. No-op when e is already in S.
  virtual void Add(ElementId e) = 0;
};

// A normalized, non-negative set function over V = {0, ..., n-1}.
// Implementations must be immutable after construction so that concurrent
// evaluation is safe, and Value must be pure.
class SetFunction {
 public:
  virtual ~SetFunction() = default;

  virtual std::size_t n() const = 0;
  virtual std::string name() const = 0;

  // f(S) evaluated from scratch. Ids are assumed valid and distinct.
  virtual double Value(std::span<const ElementId> s) const = 0;
  double Value(const ElementSet& s) const { return Value(s.members()); }

  // A fresh incremental state positioned at S = {}. The default recomputes
  // Value on every Gain call; objectives override it with accumulators.
  virtual std::unique_ptr<IncrementalState> NewState() const;
};

// Fallback IncrementalState that evaluates from scratch.
class NaiveState : public IncrementalState {
 public:
  explicit NaiveState(const SetFunction& f);

  double value() const override { return value_; }
  double Gain(ElementId e) const override;
  void Add(ElementId e) override;

 private:
  const SetFunction& f_;
  ElementSet current_;
  mutable std::vector<ElementId> scratch_;
  double value_;
};

}  // namespace smk

#endif  // SMK_CORE_SET_FUNCTION_H_
