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

#ifndef SMK_HARNESS_STATS_H_
#define SMK_HARNESS_STATS_H_

#include <cstddef>
#include <span>

namespace smk {

// One-sided 99% standard normal quantile.
inline constexpr double kZ99 = 2.3263478740408408;

struct Summary {
  std::size_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
  double min = 0.0;
  double max = 0.0;

  double StandardError() const;
  // mean - z * se and mean + z * se.
  double LowerBound(double z = kZ99) const;
  double UpperBound(double z = kZ99) const;
};

Summary Summarize(std::span<const double> xs);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Ordinary least squares y = slope * x + intercept.
LinearFit FitLine(std::span<const double> x, std::span<const double> y);

}  // namespace smk

#endif  // SMK_HARNESS_STATS_H_
