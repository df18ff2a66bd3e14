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

#include "smk/harness/report.h"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <string_view>

#include "smk/core/errors.h"

namespace smk {
namespace {

constexpr std::size_t kColumns = 14;

std::vector<std::string_view> SplitCsv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(',', start);
    fields.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

template <typename T>
T ParseField(std::string_view field, const std::string& source, int line) {
  T out{};
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(source, line, "bad numeric field '" + std::string(field) + "'");
  }
  return out;
}

std::ofstream OpenForWrite(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

std::string XmlEscape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void WriteCsv(std::span<const ExperimentRecord> records, std::ostream& out) {
  if (records.empty()) throw ContractError("no records to write");
  out << kCsvHeader << '\n';
  for (const ExperimentRecord& r : records) {
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                       r.algorithm, r.objective, r.n, r.budget_fraction,
                       r.budget, r.epsilon, r.delta, r.seed, r.trial, r.f_value,
                       r.total_queries, r.adaptive_rounds_ast,
                       r.adaptive_rounds_estimator, r.wall_ms);
  }
}

void WriteCsv(std::span<const ExperimentRecord> records,
              const std::filesystem::path& path) {
  std::ofstream out = OpenForWrite(path);
  WriteCsv(records, out);
  if (!out) throw IoError("write failed for " + path.string());
}

std::vector<ExperimentRecord> ReadCsv(std::istream& in, const std::string& source) {
  std::string line;
  int line_no = 1;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw ParseError(source, line_no, "missing or unexpected CSV header");
  }
  std::vector<ExperimentRecord> records;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = SplitCsv(line);
    if (f.size() != kColumns) {
      throw ParseError(source, line_no, "expected " + std::to_string(kColumns) + " fields");
    }
    ExperimentRecord r;
    r.algorithm = std::string(f[0]);
    r.objective = std::string(f[1]);
    r.n = ParseField<std::size_t>(f[2], source, line_no);
    r.budget_fraction = ParseField<double>(f[3], source, line_no);
    r.budget = ParseField<double>(f[4], source, line_no);
    r.epsilon = ParseField<double>(f[5], source, line_no);
    r.delta = ParseField<double>(f[6], source, line_no);
    r.seed = ParseField<std::uint64_t>(f[7], source, line_no);
    r.trial = ParseField<std::size_t>(f[8], source, line_no);
    r.f_value = ParseField<double>(f[9], source, line_no);
    r.total_queries = ParseField<std::uint64_t>(f[10], source, line_no);
    r.adaptive_rounds_ast = ParseField<std::uint64_t>(f[11], source, line_no);
    r.adaptive_rounds_estimator = ParseField<std::uint64_t>(f[12], source, line_no);
    r.wall_ms = ParseField<double>(f[13], source, line_no);
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<ExperimentRecord> ReadCsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return ReadCsv(in, path.string());
}

void WriteSvgPlot(std::span<const ExperimentRecord> records, PlotAxis axis,
                  std::ostream& out) {
  if (records.empty()) throw ContractError("no records to plot");

  bool many_objectives = false;
  for (const auto& r : records) {
    if (r.objective != records.front().objective) many_objectives = true;
  }
  // series -> fraction -> (sum, count)
  std::map<std::string, std::map<double, std::pair<double, int>>> series;
  for (const auto& r : records) {
    const std::string key =
        many_objectives ? r.algorithm + "/" + r.objective : r.algorithm;
    const double y = axis == PlotAxis::kValue
                         ? r.f_value
                         : static_cast<double>(r.adaptive_rounds_ast +
                                               r.adaptive_rounds_estimator);
    auto& cell = series[key][r.budget_fraction];
    cell.first += y;
    cell.second += 1;
  }

  double x_min = records.front().budget_fraction;
  double x_max = x_min;
  double y_max = 0.0;
  for (const auto& [key, points] : series) {
    for (const auto& [x, acc] : points) {
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_max = std::max(y_max, acc.first / acc.second);
    }
  }
  if (x_max == x_min) {
    x_min -= 0.5 * std::max(x_min, 0.01);
    x_max += 0.5 * std::max(x_max, 0.01);
  }
  if (y_max <= 0.0) y_max = 1.0;

  constexpr double kW = 640, kH = 420, kLeft = 70, kRight = 170, kTop = 30,
                   kBottom = 50;
  const double plot_w = kW - kLeft - kRight;
  const double plot_h = kH - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto sy = [&](double y) { return kTop + plot_h - y / (1.05 * y_max) * plot_h; };
  static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                            "#ff7f0e", "#9467bd", "#8c564b"};

  out << fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
      "viewBox=\"0 0 {} {}\">\n",
      kW, kH, kW, kH);
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << fmt::format(
      "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"black\"/>\n"
      "<line x1=\"{0}\" y1=\"{3}\" x2=\"{0}\" y2=\"{1}\" stroke=\"black\"/>\n",
      kLeft, kTop + plot_h, kLeft + plot_w, kTop);
  for (int t = 0; t <= 4; ++t) {
    const double xv = x_min + (x_max - x_min) * t / 4.0;
    const double yv = 1.05 * y_max * t / 4.0;
    out << fmt::format(
        "<text x=\"{:.1f}\" y=\"{:.1f}\" font-size=\"11\" "
        "text-anchor=\"middle\">{:.3g}</text>\n",
        sx(xv), kTop + plot_h + 16, xv);
    out << fmt::format(
        "<text x=\"{:.1f}\" y=\"{:.1f}\" font-size=\"11\" "
        "text-anchor=\"end\">{:.4g}</text>\n",
        kLeft - 6, sy(yv) + 4, yv);
  }
  out << fmt::format(
      "<text x=\"{:.1f}\" y=\"{:.1f}\" font-size=\"12\" "
      "text-anchor=\"middle\">budget fraction</text>\n",
      kLeft + plot_w / 2, kH - 12);
  out << fmt::format(
      "<text x=\"16\" y=\"{:.1f}\" font-size=\"12\" text-anchor=\"middle\" "
      "transform=\"rotate(-90 16 {:.1f})\">{}</text>\n",
      kTop + plot_h / 2, kTop + plot_h / 2,
      axis == PlotAxis::kValue ? "objective value" : "adaptive rounds");

  int index = 0;
  for (const auto& [key, points] : series) {
    const char* color = kColors[index % std::size(kColors)];
    if (points.size() > 1) {
      out << "<polyline fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"2\" points=\"";
      bool first = true;
      for (const auto& [x, acc] : points) {
        out << (first ? "" : " ")
            << fmt::format("{:.2f},{:.2f}", sx(x), sy(acc.first / acc.second));
        first = false;
      }
      out << "\"/>\n";
    }
    for (const auto& [x, acc] : points) {
      out << fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"3\" fill=\"{}\"/>\n",
                         sx(x), sy(acc.first / acc.second), color);
    }
    const double ly = kTop + 14 + 18 * index;
    out << fmt::format(
        "<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"12\" height=\"4\" fill=\"{}\"/>\n"
        "<text x=\"{:.1f}\" y=\"{:.1f}\" font-size=\"11\">{}</text>\n",
        kW - kRight + 16, ly - 4, color, kW - kRight + 32, ly, XmlEscape(key));
    ++index;
  }
  out << "</svg>\n";
}

void WriteSvgPlot(std::span<const ExperimentRecord> records, PlotAxis axis,
                  const std::filesystem::path& path) {
  std::ofstream out = OpenForWrite(path);
  WriteSvgPlot(records, axis, out);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace smk
