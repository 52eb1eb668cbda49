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

#include "fqcut/report.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace fqcut {
namespace {

std::vector<ReportRow> RandomRows(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ms(0.0, 5000.0);
  std::vector<ReportRow> rows;
  for (std::size_t i = 0; i < count; ++i) {
    ReportRow row;
    row.n = static_cast<int>(rng() % 19) + 2;
    row.g = rng() % 2048 + 1;
    row.formula_value = static_cast<std::int64_t>(rng() % 100000) - 50;
    row.cut_size = rng();
    row.component_count = rng() % 4096;
    row.isolated_count = rng() % 4096;
    if (rng() % 3 != 0) row.oracle_value = rng() % 100000;
    row.oracle_exact = rng() % 2;
    row.in_theorem_range = rng() % 2;
    row.match = rng() % 2;
    row.elapsed_ms = i % 5 == 0 ? 0.0 : ms(rng);
    rows.push_back(row);
  }
  return rows;
}

TEST(ReportRowTest, FromTheoremReport) {
  ReportRow row = make_report_row(verify_theorem(5, 2, true), 1.5);
  EXPECT_EQ(row.n, 5);
  EXPECT_EQ(row.g, 2u);
  EXPECT_EQ(row.formula_value, 11);
  EXPECT_EQ(row.cut_size, 11u);
  EXPECT_EQ(row.component_count, 3u);
  EXPECT_EQ(row.isolated_count, 2u);
  EXPECT_EQ(row.oracle_value, 11u);
  EXPECT_TRUE(row.oracle_exact);
  EXPECT_TRUE(row.in_theorem_range);
  EXPECT_TRUE(row.match);
  EXPECT_EQ(row.elapsed_ms, 1.5);
}

TEST(CsvTest, HeaderAndNull) {
  ReportRow row;
  row.n = 5;
  row.g = 1;
  row.formula_value = 6;
  row.cut_size = 6;
  row.component_count = 2;
  row.isolated_count = 1;
  row.in_theorem_range = true;
  row.match = true;
  row.elapsed_ms = 0.25;
  EXPECT_EQ(rows_to_csv({row}),
            "n,g,formula_value,cut_size,component_count,isolated_count,oracle_value,"
            "oracle_exact,in_theorem_range,match,elapsed_ms\n"
            "5,1,6,6,2,1,null,false,true,true,0.25\n");
}

TEST(CsvTest, RoundTripOnRandomRows) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    std::vector<ReportRow> rows = RandomRows(seed, 40);
    EXPECT_EQ(rows_from_csv(rows_to_csv(rows)), rows) << seed;
  }
  EXPECT_TRUE(rows_from_csv(rows_to_csv({})).empty());
}

TEST(CsvTest, RejectsMalformedInput) {
  EXPECT_THROW(rows_from_csv(""), std::invalid_argument);
  EXPECT_THROW(rows_from_csv("a,b\n"), std::invalid_argument);
  std::string text = rows_to_csv(RandomRows(3, 1));
  EXPECT_THROW(rows_from_csv(text + "1,2,3\n"), std::invalid_argument);
  std::string bad = rows_to_csv({ReportRow{}});
  bad.replace(bad.rfind("false"), 5, "maybe");
  EXPECT_THROW(rows_from_csv(bad), std::invalid_argument);
}

TEST(JsonTest, ExplicitNull) {
  ReportRow row;
  const std::string text = rows_to_json({row});
  EXPECT_NE(text.find("\"oracle_value\": null"), std::string::npos);
  EXPECT_EQ(row_to_json(row).size(), std::size(kReportColumns));
}

TEST(JsonTest, KeysFollowColumnOrder) {
  nlohmann::ordered_json j = row_to_json(RandomRows(9, 1).front());
  std::size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++i) {
    EXPECT_EQ(it.key(), kReportColumns[i]);
  }
}

TEST(JsonTest, RoundTripOnRandomRows) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    std::vector<ReportRow> rows = RandomRows(seed, 40);
    EXPECT_EQ(rows_from_json(rows_to_json(rows)), rows) << seed;
  }
  EXPECT_THROW(rows_from_json("{}"), std::invalid_argument);
}

TEST(SerializationTest, Deterministic) {
  std::vector<ReportRow> rows = RandomRows(42, 10);
  EXPECT_EQ(rows_to_csv(rows), rows_to_csv(RandomRows(42, 10)));
  EXPECT_EQ(rows_to_json(rows), rows_to_json(RandomRows(42, 10)));
  EXPECT_EQ(rows_to_table(rows), rows_to_table(RandomRows(42, 10)));
}

TEST(TextTableTest, AlignsColumns) {
  TextTable table({"a", "long"});
  table.add_row({"100", "1"});
  EXPECT_EQ(table.render(), "  a  long\n---------\n100     1\n");
  EXPECT_EQ(table.render_csv(), "a,long\n100,1\n");
  EXPECT_THROW(table.add_row({"1"}), std::invalid_argument);
}

}  // namespace
}  // namespace fqcut
