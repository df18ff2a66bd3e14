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

#ifndef SMK_HARNESS_REPORT_H_
#define SMK_HARNESS_REPORT_H_

#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "smk/harness/experiment.h"

namespace smk {

inline constexpr const char* kCsvHeader =
    "algorithm,objective,n,budget_fraction,B,epsilon,delta,seed,trial,"
    "f_value,total_queries,adaptive_rounds_ast,adaptive_rounds_estimator,"
    "wall_ms";

// Doubles are written in shortest round-trip form, so ReadCsv(WriteCsv(r))
// reproduces r exactly.
void WriteCsv(std::span<const ExperimentRecord> records, std::ostream& out);
void WriteCsv(std::span<const ExperimentRecord> records,
              const std::filesystem::path& path);

std::vector<ExperimentRecord> ReadCsv(std::istream& in,
                                      const std::string& source = "<stream>");
std::vector<ExperimentRecord> ReadCsv(const std::filesystem::path& path);

enum class PlotAxis { kValue, kRounds };

// Line chart of the per-fraction mean, one series per algorithm (and
// objective, when more than one is present), x = budget fraction. A series
// with a single point is drawn as a marker only.
void WriteSvgPlot(std::span<const ExperimentRecord> records, PlotAxis axis,
                  std::ostream& out);
void WriteSvgPlot(std::span<const ExperimentRecord> records, PlotAxis axis,
                  const std::filesystem::path& path);

}  // namespace smk

#endif  // SMK_HARNESS_REPORT_H_
