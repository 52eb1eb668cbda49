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

#include "fqcut/ex_oracle.hpp"

#include <stdexcept>

#include "gtest/gtest.h"

#include "brute_force.hpp"

namespace fqcut {
namespace {

void ExpectWitnessAttains(const ExOracleResult& r, int n, bool folded) {
  ASSERT_EQ(r.witness.size(), r.value.m);
  EXPECT_EQ(induced_degree_sum(CubeTopology(n, folded), r.witness), r.value.degree_sum);
}

TEST(ExOracleTest, Examples) {
  ExOracleResult q3 = ex_oracle(4, 3, false);
  EXPECT_TRUE(q3.exact);
  EXPECT_EQ(q3.value.degree_sum, 8u);
  EXPECT_EQ(q3.nodes, 70u);  // C(8, 4)
  ExpectWitnessAttains(q3, 3, false);

  ExOracleResult fq3 = ex_oracle(5, 3, true);
  EXPECT_TRUE(fq3.exact);
  EXPECT_EQ(fq3.value.degree_sum, 12u);
  EXPECT_EQ(fq3.nodes, 56u);  // C(8, 5)
  ExpectWitnessAttains(fq3, 3, true);

  for (int n = 2; n <= 5; ++n) {
    for (bool folded : {false, true}) {
      ExOracleResult one = ex_oracle(1, n, folded);
      EXPECT_TRUE(one.exact);
      EXPECT_EQ(one.value.degree_sum, 0u);
    }
  }
}

TEST(ExOracleTest, AgreesWithBruteForceAtN4) {
  for (bool folded : {false, true}) {
    for (unsigned m = 1; m <= 16; ++m) {
      ExOracleResult r = ex_oracle(m, 4, folded);
      ASSERT_TRUE(r.exact);
      EXPECT_EQ(r.value.degree_sum, brute::brute_max_degree_sum(4, folded, m))
          << "folded=" << folded << " m=" << m;
      ExpectWitnessAttains(r, 4, folded);
    }
  }
}

TEST(ExOracleTest, BranchAndBoundMatchesClosedFormAtN5) {
  for (bool folded : {false, true}) {
    for (unsigned m = 1; m <= 8; ++m) {
      ExOracleResult r = ex_oracle(m, 5, folded);
      ASSERT_TRUE(r.exact);
      EXPECT_EQ(r.value.degree_sum, ex_value(m, 5, folded).degree_sum) << m;
      ExpectWitnessAttains(r, 5, folded);
    }
  }
  ExOracleResult whole = ex_oracle(32, 5, true);
  EXPECT_TRUE(whole.exact);
  EXPECT_EQ(whole.value.degree_sum, 6u * 32u);
}

TEST(ExOracleTest, BudgetExhaustionIsFlagged) {
  ExOracleResult r = ex_oracle(8, 4, true, SearchBudget{10});
  EXPECT_FALSE(r.exact);
  EXPECT_LE(r.value.degree_sum, ex_fqn(8, 4).degree_sum);
  ExpectWitnessAttains(r, 4, true);

  ExOracleResult bb = ex_oracle(8, 5, true, SearchBudget{3});
  EXPECT_FALSE(bb.exact);
  // The seed is still reported as a lower bound.
  EXPECT_EQ(bb.value.degree_sum, ex_fqn(8, 5).degree_sum);
}

TEST(ExOracleTest, RejectsBadInput) {
  EXPECT_THROW(ex_oracle(0, 3, false), std::invalid_argument);
  EXPECT_THROW(ex_oracle(9, 3, false), std::invalid_argument);
  EXPECT_THROW(ex_oracle(4, 7, false), UnsupportedScale);
}

}  // namespace
}  // namespace fqcut
