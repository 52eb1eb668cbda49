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

#include "fqcut/lemma_suite.hpp"

#include <stdexcept>

#include "gtest/gtest.h"

namespace fqcut {
namespace {

TEST(ParseLemmaIdTest, NamesAndNumbers) {
  for (LemmaId id : kAllLemmas) EXPECT_EQ(parse_lemma_id(lemma_name(id)), id);
  EXPECT_EQ(parse_lemma_id("2"), LemmaId::kSuperadditivity);
  EXPECT_EQ(parse_lemma_id("6"), LemmaId::kIsomorphism);
  EXPECT_EQ(parse_lemma_id("9"), LemmaId::kXiMonotone);
  EXPECT_EQ(parse_lemma_id("10"), LemmaId::kSublinearity);
  EXPECT_EQ(parse_lemma_id("11"), LemmaId::kMergeBound);
  EXPECT_FALSE(parse_lemma_id("7").has_value());
  EXPECT_FALSE(parse_lemma_id("").has_value());
}

TEST(LemmaSweepTest, RecordKeepsFirstViolation) {
  LemmaSweep s;
  s.record(true, "a");
  s.record(false, "b");
  s.record(false, "c");
  EXPECT_EQ(s.cases, 3u);
  EXPECT_EQ(s.violations, 2u);
  EXPECT_EQ(s.first_violation, "b");
  EXPECT_FALSE(s.passed());
}

TEST(SweepTest, SuperadditivityThroughN8) {
  for (int n = 2; n <= 8; ++n) {
    LemmaSweep s = sweep_superadditivity(n);
    EXPECT_TRUE(s.passed()) << n << ": " << s.first_violation;
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    // Pairs m0 <= m1 with m0 + m1 <= 2^n.
    std::uint64_t expected = 0;
    for (std::uint64_t m0 = 1; m0 <= half; ++m0) expected += 2 * half - 2 * m0 + 1;
    EXPECT_EQ(s.cases, expected);
  }
}

TEST(SweepTest, IsomorphismThroughN6) {
  for (int n = 2; n <= 6; ++n) {
    LemmaSweep s = sweep_isomorphism(n);
    EXPECT_TRUE(s.passed()) << n << ": " << s.first_violation;
    EXPECT_EQ(s.cases, 2 * (std::uint64_t{1} << n));
  }
}

TEST(SweepTest, XiMonotoneThroughN12) {
  for (int n = 2; n <= 12; ++n) {
    LemmaSweep s = sweep_xi_monotone(n);
    EXPECT_TRUE(s.passed()) << n << ": " << s.first_violation;
    EXPECT_EQ(s.cases, max_theorem_g(n) - 1);
  }
}

TEST(SweepTest, SublinearityThroughN10) {
  for (int n = 2; n <= 10; ++n) {
    LemmaSweep s = sweep_sublinearity(n);
    EXPECT_TRUE(s.passed()) << n << ": " << s.first_violation;
    EXPECT_EQ(s.cases, std::uint64_t{1} << (n - 1));
  }
}

TEST(SweepTest, MergeBound) {
  for (int n : {3, 5, 6, 8}) {
    LemmaSweep s = sweep_merge_bound(n);
    EXPECT_TRUE(s.passed()) << n << ": " << s.first_violation;
  }
  // p(1) + ... + p(16) = 1 + 2 + 3 + 5 + 7 + 11 + 15 + 22 + 30 + 42 + 56 + 77
  //                      + 101 + 135 + 176 + 231 = 914 partitions.
  EXPECT_EQ(sweep_merge_bound(6, 0).cases, 914u);
  EXPECT_EQ(sweep_merge_bound(6).cases, 914u + kMergeRandomSamples);
  // n = 2 caps every size at 4: p(1..4) = 1 + 2 + 3 + 5.
  EXPECT_EQ(sweep_merge_bound(2, 0).cases, 11u);
}

TEST(SweepTest, MergeBoundIsDeterministic) {
  LemmaSweep a = sweep_merge_bound(6, 500, 7);
  LemmaSweep b = sweep_merge_bound(6, 500, 7);
  EXPECT_EQ(a.cases, b.cases);
  EXPECT_EQ(a.violations, b.violations);
}

TEST(RunLemmaSweepTest, DispatchesAndRejects) {
  EXPECT_EQ(run_lemma_sweep(LemmaId::kSublinearity, 4).id, LemmaId::kSublinearity);
  EXPECT_THROW(run_lemma_sweep(LemmaId::kSublinearity, 11), std::invalid_argument);
  EXPECT_THROW(run_lemma_sweep(LemmaId::kSublinearity, 1), std::invalid_argument);
}

}  // namespace
}  // namespace fqcut
