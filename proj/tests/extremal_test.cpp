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

#include "fqcut/extremal.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

#include "brute_force.hpp"

namespace fqcut {
namespace {

TEST(GreedyDecomposeTest, Examples) {
  EXPECT_EQ(greedy_decompose(1).exponents, (std::vector<int>{0}));
  EXPECT_EQ(greedy_decompose(6).exponents, (std::vector<int>{2, 1}));
  EXPECT_EQ(greedy_decompose(7).exponents, (std::vector<int>{2, 1, 0}));
  EXPECT_THROW(greedy_decompose(0), std::invalid_argument);
}

TEST(GreedyDecomposeTest, ReproducesBinaryExpansionUpTo2To20) {
  for (std::uint64_t m = 1; m <= (std::uint64_t{1} << 20); ++m) {
    GreedyDecomposition d = greedy_decompose(m);
    std::uint64_t sum = 0;
    std::uint64_t rest = m;
    for (std::size_t i = 0; i < d.exponents.size(); ++i) {
      if (i > 0) {
        ASSERT_GT(d.exponents[i - 1], d.exponents[i]);
      }
      // t_i = floor(log2(m - previous terms)).
      ASSERT_EQ(std::uint64_t{1} << d.exponents[i], std::bit_floor(rest));
      rest -= std::uint64_t{1} << d.exponents[i];
      sum += std::uint64_t{1} << d.exponents[i];
    }
    ASSERT_EQ(sum, m);
    ASSERT_EQ(d.term_count(), static_cast<std::size_t>(std::popcount(m)));
  }
}

TEST(ExQnTest, Examples) {
  EXPECT_EQ(ex_qn(1, 3).degree_sum, 0u);
  EXPECT_EQ(ex_qn(2, 3).degree_sum, 2u);
  EXPECT_EQ(ex_qn(5, 3).degree_sum, 10u);
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(ex_qn(8, n).degree_sum, 24u);
}

TEST(ExQnTest, RejectsOutOfRange) {
  EXPECT_THROW(ex_qn(0, 3), std::invalid_argument);
  EXPECT_THROW(ex_qn(9, 3), std::invalid_argument);
  EXPECT_THROW(ex_qn(1, 1), std::invalid_argument);
}

TEST(ExQnTest, EvenNondecreasingAndSubcubes) {
  for (int n = 2; n <= 12; ++n) {
    std::uint64_t previous = 0;
    for (std::uint64_t m = 1; m <= (std::uint64_t{1} << n); ++m) {
      const std::uint64_t value = ex_qn(m, n).degree_sum;
      ASSERT_EQ(value % 2, 0u);
      ASSERT_GE(value, previous);
      ASSERT_LE(value, static_cast<std::uint64_t>(n) * m);
      previous = value;
    }
    for (int k = 0; k <= n; ++k) {
      ASSERT_EQ(ex_qn(std::uint64_t{1} << k, n).degree_sum,
                static_cast<std::uint64_t>(k) << k);
    }
  }
}

TEST(ExFqnTest, Examples) {
  EXPECT_EQ(ex_fqn(5, 3).degree_sum, 12u);
  for (int n = 2; n <= 10; ++n) {
    const std::uint64_t total = std::uint64_t{1} << n;
    EXPECT_EQ(ex_fqn(total, n).degree_sum, static_cast<std::uint64_t>(n + 1) * total);
    for (std::uint64_t m = 1; m <= total / 2; ++m) {
      ASSERT_EQ(ex_fqn(m, n).degree_sum, ex_qn(m, n).degree_sum);
    }
  }
}

TEST(ExFqnTest, SingleCountBranchIsOddAndWrong) {
  EXPECT_EQ(ex_fqn_single_count(5, 3), 11u);
  EXPECT_EQ(ex_fqn_single_count(4, 3), ex_fqn(4, 3).degree_sum);
  EXPECT_NE(ex_fqn_single_count(8, 3), 32u);
}

// Frozen from brute_max_degree_sum (every m-subset scanned).
TEST(ExClosedFormTest, MatchesFrozenBruteForceTables) {
  const std::vector<std::uint64_t> q3 = {0, 2, 4, 8, 10, 14, 18, 24};
  const std::vector<std::uint64_t> fq3 = {0, 2, 4, 8, 12, 18, 24, 32};
  const std::vector<std::uint64_t> q4 = {0,  2,  4,  8,  10, 14, 18, 24,
                                         26, 30, 34, 40, 44, 50, 56, 64};
  const std::vector<std::uint64_t> fq4 = {0,  2,  4,  8,  10, 14, 18, 24,
                                          28, 34, 40, 48, 54, 62, 70, 80};
  for (std::uint64_t m = 1; m <= 8; ++m) {
    EXPECT_EQ(ex_qn(m, 3).degree_sum, q3[m - 1]) << m;
    EXPECT_EQ(ex_fqn(m, 3).degree_sum, fq3[m - 1]) << m;
  }
  for (std::uint64_t m = 1; m <= 16; ++m) {
    EXPECT_EQ(ex_qn(m, 4).degree_sum, q4[m - 1]) << m;
    EXPECT_EQ(ex_fqn(m, 4).degree_sum, fq4[m - 1]) << m;
  }
}

TEST(ExClosedFormTest, MatchesLiveBruteForceAtN3) {
  for (bool folded : {false, true}) {
    for (unsigned m = 1; m <= 8; ++m) {
      EXPECT_EQ(ex_value(m, 3, folded).degree_sum,
                brute::brute_max_degree_sum(3, folded, m))
          << "folded=" << folded << " m=" << m;
    }
  }
}

TEST(XiTest, Examples) {
  for (int n = 2; n <= 10; ++n) EXPECT_EQ(xi(1, n), n + 1);
  EXPECT_EQ(xi(2, 5), 11);
  for (std::uint64_t m = 1; m < 8; ++m) EXPECT_LT(xi(m, 5), xi(m + 1, 5));
}

TEST(IncompleteSetTest, Examples) {
  EXPECT_EQ(incomplete_set(4, IncompleteKind::L, 3), (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(incomplete_set(2, IncompleteKind::R, 3), (VertexSet{7, 6}));
  EXPECT_EQ(incomplete_set(3, IncompleteKind::RF, 4), (VertexSet{15, 14, 13}));
  EXPECT_THROW(incomplete_set(0, IncompleteKind::LF, 3), std::invalid_argument);
  EXPECT_THROW(incomplete_set(9, IncompleteKind::LF, 3), std::invalid_argument);
}

// Every incomplete (folded) hypercube attains the closed form, i.e. is a
// composite set.
TEST(IncompleteSetTest, AttainsClosedForm) {
  for (int n = 2; n <= 8; ++n) {
    for (IncompleteKind kind : {IncompleteKind::L, IncompleteKind::R,
                                IncompleteKind::LF, IncompleteKind::RF}) {
      const bool folded = is_folded_kind(kind);
      CubeTopology topo(n, folded);
      for (std::uint64_t m = 1; m <= topo.vertex_count(); ++m) {
        ASSERT_EQ(induced_degree_sum(topo, incomplete_set(m, kind, n)),
                  ex_value(m, n, folded).degree_sum)
            << "n=" << n << " m=" << m << " kind=" << static_cast<int>(kind);
      }
    }
  }
}

TEST(SuperadditivityTest, Examples) {
  CheckResult one = check_superadditivity(1, 1, 4);
  EXPECT_TRUE(one.holds);
  EXPECT_EQ(one.slack, 0);
  CheckResult two = check_superadditivity(2, 2, 3);
  EXPECT_TRUE(two.holds);
  EXPECT_EQ(two.slack, 0);
  EXPECT_THROW(check_superadditivity(3, 2, 4), std::invalid_argument);
  EXPECT_THROW(check_superadditivity(4, 5, 3), std::invalid_argument);
}

TEST(SublinearityTest, Examples) {
  for (int n = 2; n <= 8; ++n) {
    EXPECT_EQ(check_sublinearity(1, n).slack, n - 1);
    EXPECT_EQ(check_sublinearity(std::uint64_t{1} << (n - 1), n).slack, 0);
  }
  EXPECT_THROW(check_sublinearity(5, 3), std::invalid_argument);
}

TEST(MergeBoundTest, Examples) {
  std::vector<std::uint64_t> ones(6, 1);
  CheckResult all_ones = check_merge_bound(ones, 5);
  EXPECT_TRUE(all_ones.holds);
  EXPECT_EQ(all_ones.slack, 0);

  std::vector<std::uint64_t> twos = {2, 2};
  CheckResult r = check_merge_bound(twos, 4);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.slack, 0);  // 2 + 2 <= ex_3 = 4

  std::vector<std::uint64_t> bad = {0, 2};
  EXPECT_THROW(check_merge_bound(bad, 4), std::invalid_argument);
  std::vector<std::uint64_t> too_big = {8, 2};
  EXPECT_THROW(check_merge_bound(too_big, 3), std::invalid_argument);
}

TEST(IsomorphismTest, Examples) {
  EXPECT_TRUE(check_isomorphism(1, 4, false));
  EXPECT_TRUE(check_isomorphism(16, 4, true));
  for (bool folded : {false, true}) {
    for (std::uint64_t m = 1; m <= 16; ++m) {
      EXPECT_TRUE(check_isomorphism(m, 4, folded)) << m;
    }
  }
}

}  // namespace
}  // namespace fqcut
