// Copyright 2026 The fqcut Authors
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

// Report rows and their table / CSV / JSON renderings.
//
// CSV columns follow the ReportRow field order under a header row. JSON is an
// array of objects keyed by field name. A missing oracle value is written as
// an explicit null in both.

#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "json.hpp"

#include "fqcut/connectivity.hpp"

namespace fqcut {

struct ReportRow {
  int n = 0;
  std::uint64_t g = 0;
  std::int64_t formula_value = 0;
  std::uint64_t cut_size = 0;
  std::uint64_t component_count = 0;
  std::uint64_t isolated_count = 0;
  std::optional<std::uint64_t> oracle_value;
  bool oracle_exact = false;
  bool in_theorem_range = false;
  bool match = false;
  double elapsed_ms = 0.0;

  bool operator==(const ReportRow&) const = default;
};

inline constexpr const char* kReportColumns[] = {
    "n",       "g",          "formula_value",    "cut_size",
    "component_count", "isolated_count", "oracle_value", "oracle_exact",
    "in_theorem_range", "match", "elapsed_ms"};

inline ReportRow make_report_row(const TheoremReport& report, double elapsed_ms) {
  ReportRow row;
  row.n = report.n;
  row.g = report.g;
  row.formula_value = report.formula_value;
  row.cut_size = report.constructed_cut_size;
  row.component_count = report.component_profile.count;
  row.isolated_count = report.component_profile.isolated_count;
  row.oracle_value = report.oracle_value;
  row.oracle_exact = report.oracle_exact;
  row.in_theorem_range = report.in_theorem_range;
  row.match = report.matches();
  row.elapsed_ms = elapsed_ms;
  return row;
}

namespace detail {

inline std::string format_double(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw std::runtime_error("cannot format double");
  return std::string(buffer, end);
}

template <typename T>
T parse_number(std::string_view text, const char* field) {
  T value{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw std::invalid_argument(std::string("bad value for ") + field + ": '" +
                                std::string(text) + "'");
  }
  return value;
}

inline bool parse_bool(std::string_view text, const char* field) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw std::invalid_argument(std::string("bad boolean for ") + field + ": '" +
                              std::string(text) + "'");
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else if (c != '\r') {
      current.push_back(c);
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

}  // namespace detail

inline std::vector<std::string> report_row_fields(const ReportRow& row) {
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  return {std::to_string(row.n),
          std::to_string(row.g),
          std::to_string(row.formula_value),
          std::to_string(row.cut_size),
          std::to_string(row.component_count),
          std::to_string(row.isolated_count),
          row.oracle_value ? std::to_string(*row.oracle_value) : "null",
          flag(row.oracle_exact),
          flag(row.in_theorem_range),
          flag(row.match),
          detail::format_double(row.elapsed_ms)};
}

inline std::string rows_to_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  bool first = true;
  for (const char* column : kReportColumns) {
    out << (first ? "" : ",") << column;
    first = false;
  }
  out << '\n';
  for (const ReportRow& row : rows) {
    std::vector<std::string> fields = report_row_fields(row);
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i];
    out << '\n';
  }
  return out.str();
}

inline std::vector<ReportRow> rows_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
  std::vector<std::string> header = detail::split_csv_line(line);
  if (header.size() != std::size(kReportColumns) ||
      !std::equal(header.begin(), header.end(), std::begin(kReportColumns))) {
    throw std::invalid_argument("unexpected CSV header: " + line);
  }
  std::vector<ReportRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f = detail::split_csv_line(line);
    if (f.size() != header.size()) {
      throw std::invalid_argument("CSV row has " + std::to_string(f.size()) +
                                  " fields: " + line);
    }
    ReportRow row;
    row.n = detail::parse_number<int>(f[0], "n");
    row.g = detail::parse_number<std::uint64_t>(f[1], "g");
    row.formula_value = detail::parse_number<std::int64_t>(f[2], "formula_value");
    row.cut_size = detail::parse_number<std::uint64_t>(f[3], "cut_size");
    row.component_count = detail::parse_number<std::uint64_t>(f[4], "component_count");
    row.isolated_count = detail::parse_number<std::uint64_t>(f[5], "isolated_count");
    if (f[6] != "null") {
      row.oracle_value = detail::parse_number<std::uint64_t>(f[6], "oracle_value");
    }
    row.oracle_exact = detail::parse_bool(f[7], "oracle_exact");
    row.in_theorem_range = detail::parse_bool(f[8], "in_theorem_range");
    row.match = detail::parse_bool(f[9], "match");
    row.elapsed_ms = detail::parse_number<double>(f[10], "elapsed_ms");
    rows.push_back(row);
  }
  return rows;
}

inline nlohmann::ordered_json row_to_json(const ReportRow& row) {
  nlohmann::ordered_json j;
  j["n"] = row.n;
  j["g"] = row.g;
  j["formula_value"] = row.formula_value;
  j["cut_size"] = row.cut_size;
  j["component_count"] = row.component_count;
  j["isolated_count"] = row.isolated_count;
  j["oracle_value"] = row.oracle_value ? nlohmann::ordered_json(*row.oracle_value)
                                       : nlohmann::ordered_json(nullptr);
  j["oracle_exact"] = row.oracle_exact;
  j["in_theorem_range"] = row.in_theorem_range;
  j["match"] = row.match;
  j["elapsed_ms"] = row.elapsed_ms;
  return j;
}

inline ReportRow row_from_json(const nlohmann::ordered_json& j) {
  ReportRow row;
  row.n = j.at("n").get<int>();
  row.g = j.at("g").get<std::uint64_t>();
  row.formula_value = j.at("formula_value").get<std::int64_t>();
  row.cut_size = j.at("cut_size").get<std::uint64_t>();
  row.component_count = j.at("component_count").get<std::uint64_t>();
  row.isolated_count = j.at("isolated_count").get<std::uint64_t>();
  const auto& oracle = j.at("oracle_value");
  if (!oracle.is_null()) row.oracle_value = oracle.get<std::uint64_t>();
  row.oracle_exact = j.at("oracle_exact").get<bool>();
  row.in_theorem_range = j.at("in_theorem_range").get<bool>();
  row.match = j.at("match").get<bool>();
  row.elapsed_ms = j.at("elapsed_ms").get<double>();
  return row;
}

inline std::string rows_to_json(const std::vector<ReportRow>& rows) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const ReportRow& row : rows) array.push_back(row_to_json(row));
  return array.dump(2) + "\n";
}

inline std::vector<ReportRow> rows_from_json(const std::string& text) {
  nlohmann::ordered_json array = nlohmann::ordered_json::parse(text);
  if (!array.is_array()) throw std::invalid_argument("expected a JSON array");
  std::vector<ReportRow> rows;
  for (const auto& item : array) rows.push_back(row_from_json(item));
  return rows;
}

/// Column-aligned plain text table.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<std::string> row) {
    if (row.size() != header_.size()) {
      throw std::invalid_argument("table row width does not match header");
    }
    rows_.push_back(std::move(row));
  }

  std::string render() const {
    std::vector<std::size_t> width(header_.size());
    for (std::size_t c = 0; c < header_.size(); ++c) width[c] = header_[c].size();
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        width[c] = std::max(width[c], row[c].size());
      }
    }
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c) out << "  ";
        out << std::string(width[c] - cells[c].size(), ' ') << cells[c];
      }
      out << '\n';
    };
    line(header_);
    std::size_t total = 0;
    for (std::size_t w : width) total += w;
    out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
    for (const auto& row : rows_) line(row);
    return out.str();
  }

  std::string render_csv() const {
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << cells[c];
      out << '\n';
    };
    line(header_);
    for (const auto& row : rows_) line(row);
    return out.str();
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

inline std::string rows_to_table(const std::vector<ReportRow>& rows) {
  TextTable table(std::vector<std::string>(std::begin(kReportColumns),
                                           std::end(kReportColumns)));
  for (const ReportRow& row : rows) table.add_row(report_row_fields(row));
  return table.render();
}

}  // namespace fqcut
