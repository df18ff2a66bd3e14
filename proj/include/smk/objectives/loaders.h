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

#ifndef SMK_OBJECTIVES_LOADERS_H_
#define SMK_OBJECTIVES_LOADERS_H_

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "smk/objectives/graph.h"

namespace smk {

// Edge list: one `<u> <v> <w>` per line, `#` comments, blank lines ignored.
// Node count is 1 + the largest id. Malformed lines raise ParseError with the
// line number; non-finite or negative weights, self loops and duplicate
// undirected pairs raise DataError.
WeightedGraph ParseEdgeList(std::istream& in, const std::string& source = "<stream>");
WeightedGraph LoadEdgeList(const std::filesystem::path& path);

// Feature CSV: one element per row, all rows the same length.
std::vector<std::vector<double>> ParseFeatureRows(std::istream& in,
                                                  const std::string& source = "<stream>");
// Loads a feature CSV and returns the cosine similarity matrix.
SimilarityMatrix LoadFeatures(const std::filesystem::path& path);

}  // namespace smk

#endif  // SMK_OBJECTIVES_LOADERS_H_
