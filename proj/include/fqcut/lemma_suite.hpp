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

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fqcut/connectivity.hpp"
#include "fqcut/extremal.hpp"

namespace fqcut {

enum class LemmaId {
  kSuperadditivity,
  kIsomorphism,
  kXiMonotone,
  kSublinearity,
  kMergeBound,
};

inline constexpr LemmaId kAllLemmas[] = {
    LemmaId::kSuperadditivity, LemmaId::kIsomorphism, LemmaId::kXiMonotone,
    LemmaId::kSublinearity, LemmaId::kMergeBound};

inline std::string lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::kSuperadditivity: return "superadditivity";
    case LemmaId::kIsomorphism: return "isomorphism";
    case LemmaId::kXiMonotone: return "xi-monotone";
    case LemmaId::kSublinearity: return "sublinearity";
    case LemmaId::kMergeBound: return "merge-bound";
  }
  return "unknown";
}

/// Accepts a name from lemma_name() or the customary lemma number
/// (2, 6, 9, 10, 11).
inline std::optional<LemmaId> parse_lemma_id(const std::string& text) {
  for (LemmaId id : kAllLemmas) {
    if (text == lemma_name(id)) return id;
  }
  if (text == "2") return LemmaId::kSuperadditivity;
  if (text == "6") return LemmaId::kIsomorphism;
  if (text == "9") return LemmaId::kXiMonotone;
  if (text == "10") return LemmaId::kSublinearity;
  if (text == "11") return LemmaId::kMergeBound;
  return std::nullopt;
}

struct LemmaSweep {
  LemmaId id = LemmaId::kSuperadditivity;
  int n = 0;
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;
  std::string first_violation;

  bool passed() const { return violations == 0; }

  void record(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (violations++ == 0) first_violation = what;
  }
};

/// All 1 <= m0 <= m1 with m0 + m1 <= 2^n.
inline LemmaSweep sweep_superadditivity(int n) {
  LemmaSweep sweep{LemmaId::kSuperadditivity, n, 0, 0, {}};
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m0 = 1; 2 * m0 <= total; ++m0) {
    for (std::uint64_t m1 = m0; m0 + m1 <= total; ++m1) {
      CheckResult r = check_superadditivity(m0, m1, n);
      sweep.record(r.holds && r.slack >= 0,
                   "m0=" + std::to_string(m0) + " m1=" + std::to_string(m1));
    }
  }
  return sweep;
}

/// Every m, plain and folded.
inline LemmaSweep sweep_isomorphism(int n) {
  LemmaSweep sweep{LemmaId::kIsomorphism, n, 0, 0, {}};
  const std::uint64_t total = std::uint64_t{1} << n;
  for (bool folded : {false, true}) {
    for (std::uint64_t m = 1; m <= total; ++m) {
      sweep.record(check_isomorphism(m, n, folded),
                   std::string(folded ? "folded" : "plain") +
                       " m=" + std::to_string(m));
    }
  }
  return sweep;
}

/// xi(m+1) > xi(m) for m + 1 <= 2^floor((n+1)/2), and the step equals
/// (n+1) - popcount(m).
inline LemmaSweep sweep_xi_monotone(int n) {
  LemmaSweep sweep{LemmaId::kXiMonotone, n, 0, 0, {}};
  const std::uint64_t limit = max_theorem_g(n);
  for (std::uint64_t m = 1; m < limit; ++m) {
    const std::int64_t step = xi(m + 1, n) - xi(m, n);
    const auto expected = static_cast<std::int64_t>(n + 1) -
                          static_cast<std::int64_t>(std::popcount(m));
    sweep.record(step > 0 && step == expected,
                 "m=" + std::to_string(m) + " step=" + std::to_string(step));
  }
  return sweep;
}

/// Every m <= 2^(n-1).
inline LemmaSweep sweep_sublinearity(int n) {
  LemmaSweep sweep{LemmaId::kSublinearity, n, 0, 0, {}};
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  for (std::uint64_t m = 1; m <= half; ++m) {
    CheckResult r = check_sublinearity(m, n);
    sweep.record(r.holds, "m=" + std::to_string(m));
  }
  return sweep;
}

inline constexpr std::uint64_t kMergeExhaustiveMax = 16;
inline constexpr std::uint64_t kMergeRandomMax = 32;
inline constexpr std::uint64_t kMergeRandomSamples = 10'000;
inline constexpr std::uint64_t kMergeRandomSeed = 0x5eedf00dULL;

/// Every integer partition of m <= 16, then random compositions of m <= 32
/// (both capped at 2^n).
inline LemmaSweep sweep_merge_bound(int n,
                                    std::uint64_t samples = kMergeRandomSamples,
                                    std::uint64_t seed = kMergeRandomSeed) {
  LemmaSweep sweep{LemmaId::kMergeBound, n, 0, 0, {}};
  const std::uint64_t total = std::uint64_t{1} << n;
  auto describe = [](const std::vector<std::uint64_t>& parts) {
    std::ostringstream out;
    out << "sizes=";
    for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "+" : "") << parts[i];
    return out.str();
  };

  std::vector<std::uint64_t> parts;
  // Non-increasing parts, so each multiset is visited once.
  auto partitions = [&](auto&& self, std::uint64_t rest, std::uint64_t cap) -> void {
    if (rest == 0) {
      CheckResult r = check_merge_bound(parts, n);
      sweep.record(r.holds, describe(parts));
      return;
    }
    for (std::uint64_t p = std::min(rest, cap); p >= 1; --p) {
      parts.push_back(p);
      self(self, rest - p, p);
      parts.pop_back();
    }
  };
  for (std::uint64_t m = 1; m <= std::min(kMergeExhaustiveMax, total); ++m) {
    partitions(partitions, m, m);
  }

  std::mt19937_64 rng(seed);
  const std::uint64_t random_max = std::min(kMergeRandomMax, total);
  std::vector<std::uint64_t> cuts;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const std::uint64_t m =
        std::uniform_int_distribution<std::uint64_t>(1, random_max)(rng);
    const std::uint64_t r = std::uniform_int_distribution<std::uint64_t>(1, m)(rng);
    // r - 1 distinct cut points in [1, m - 1].
    cuts.resize(m - 1);
    std::iota(cuts.begin(), cuts.end(), std::uint64_t{1});
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(r - 1);
    std::sort(cuts.begin(), cuts.end());
    parts.clear();
    std::uint64_t previous = 0;
    for (std::uint64_t c : cuts) {
      parts.push_back(c - previous);
      previous = c;
    }
    parts.push_back(m - previous);
    CheckResult result = check_merge_bound(parts, n);
    sweep.record(result.holds, describe(parts));
  }
  return sweep;
}

inline constexpr int kLemmaSweepMaxDimension = 10;

inline LemmaSweep run_lemma_sweep(LemmaId id, int n) {
  detail::require_dimension(n);
  if (n > kLemmaSweepMaxDimension) {
    throw std::invalid_argument("lemma sweeps support n <= " +
                                std::to_string(kLemmaSweepMaxDimension));
  }
  switch (id) {
    case LemmaId::kSuperadditivity: return sweep_superadditivity(n);
    case LemmaId::kIsomorphism: return sweep_isomorphism(n);
    case LemmaId::kXiMonotone: return sweep_xi_monotone(n);
    case LemmaId::kSublinearity: return sweep_sublinearity(n);
    case LemmaId::kMergeBound: return sweep_merge_bound(n);
  }
  throw std::invalid_argument("unknown lemma id");
}

}  // namespace fqcut
