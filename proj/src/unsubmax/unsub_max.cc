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

#include "smk/unsubmax/unsub_max.h"

#include <vector>

#include "smk/core/errors.h"

namespace smk {

UnSubMaxResult UnSubMax(CountingOracle& oracle, const ElementSet& ground,
                        std::size_t samples, std::mt19937_64& rng) {
  if (samples < 1) throw ParameterError("UnSubMax needs at least one sample");
  std::bernoulli_distribution keep(0.5);
  std::vector<ElementSet> batch;
  batch.reserve(samples + 2);
  for (std::size_t t = 0; t < samples; ++t) {
    ElementSet s;
    for (ElementId e : ground) {
      if (keep(rng)) s.Insert(e);
    }
    batch.push_back(std::move(s));
  }
  batch.emplace_back();
  batch.push_back(ground);

  const std::vector<double> values = oracle.EvaluateBatch(batch);
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return {std::move(batch[best]), values[best]};
}

}  // namespace smk
