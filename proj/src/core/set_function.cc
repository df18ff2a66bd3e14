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

#include "smk/core/set_function.h"

namespace smk {

std::unique_ptr<IncrementalState> SetFunction::NewState() const {
  return std::make_unique<NaiveState>(*this);
}

NaiveState::NaiveState(const SetFunction& f) : f_(f), value_(f.Value(std::span<const ElementId>())) {}

double NaiveState::Gain(ElementId e) const {
  if (current_.Contains(e)) return 0.0;
  scratch_.assign(current_.begin(), current_.end());
  scratch_.push_back(e);
  return f_.Value(scratch_) - value_;
}

void NaiveState::Add(ElementId e) {
  if (!current_.Insert(e)) return;
  value_ = f_.Value(current_);
}

}  // namespace smk
