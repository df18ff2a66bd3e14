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

#include "smk/objectives/loaders.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <string_view>
#include <utility>

#include "smk/core/errors.h"

namespace smk {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> SplitFields(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  if (sep == ' ') {
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i == line.size()) break;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      fields.push_back(line.substr(i, j - i));
      i = j;
    }
  } else {
    std::size_t start = 0;
    for (;;) {
      const auto pos = line.find(sep, start);
      fields.push_back(Trim(line.substr(start, pos - start)));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
  }
  return fields;
}

template <typename T>
bool ParseNumber(std::string_view field, T& out) {
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::ifstream OpenOrThrow(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

}  // namespace

WeightedGraph ParseEdgeList(std::istream& in, const std::string& source) {
  std::vector<Edge> edges;
  std::set<std::pair<ElementId, ElementId>> seen;
  std::size_t n = 0;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = SplitFields(line, ' ');
    if (fields.size() != 3) {
      throw ParseError(source, line_no, "expected `<u> <v> <w>`");
    }
    ElementId u = 0;
    ElementId v = 0;
    double w = 0.0;
    if (!ParseNumber(fields[0], u) || !ParseNumber(fields[1], v)) {
      throw ParseError(source, line_no, "node ids must be non-negative integers");
    }
    if (!ParseNumber(fields[2], w)) {
      throw ParseError(source, line_no, "weight is not a decimal number");
    }
    const std::string where = source + ":" + std::to_string(line_no) + ": ";
    if (!std::isfinite(w)) throw DataError(where + "non-finite edge weight");
    if (w < 0.0) throw DataError(where + "negative edge weight");
    if (u == v) throw DataError(where + "self loop");
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw DataError(where + "duplicate edge");
    }
    n = std::max<std::size_t>(n, std::max(u, v) + std::size_t{1});
    edges.push_back({u, v, w});
  }
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph LoadEdgeList(const std::filesystem::path& path) {
  std::ifstream in = OpenOrThrow(path);
  return ParseEdgeList(in, path.string());
}

std::vector<std::vector<double>> ParseFeatureRows(std::istream& in,
                                                  const std::string& source) {
  std::vector<std::vector<double>> rows;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = Trim(raw);
    if (line.empty()) continue;
    std::vector<double> row;
    for (std::string_view field : SplitFields(line, ',')) {
      double x = 0.0;
      if (!ParseNumber(field, x)) {
        throw ParseError(source, line_no, "not a decimal number: '" +
                                              std::string(field) + "'");
      }
      if (!std::isfinite(x)) {
        throw DataError(source + ":" + std::to_string(line_no) +
                        ": non-finite feature value");
      }
      row.push_back(x);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(source, line_no,
                       "row has " + std::to_string(row.size()) +
                           " values, expected " +
                           std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

SimilarityMatrix LoadFeatures(const std::filesystem::path& path) {
  std::ifstream in = OpenOrThrow(path);
  return SimilarityMatrix::FromFeatures(ParseFeatureRows(in, path.string()));
}

}  // namespace smk
