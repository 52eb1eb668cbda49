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

// Component edge connectivity of FQ_n.
//
// For n >= 5 and 1 <= g <= 2^floor((n+1)/2):
//
//   c_lambda_{g+1}(FQ_n) = (n+1) g - ex_g / 2
//
// and an optimal cut isolates g vertices. The upper bound is attained by
// cutting every edge touching {0, ..., g-1}; the exact searches below supply
// the matching lower bound at the sizes where exhaustion is affordable.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fqcut/errors.hpp"
#include "fqcut/extremal.hpp"
#include "fqcut/graph_core.hpp"
#include "fqcut/min_cut.hpp"
#include "fqcut/partition_search.hpp"

namespace fqcut {

inline constexpr int kTheoremMinDimension = 5;
inline constexpr int kConstructionMinDimension = 3;

/// 2^floor((n+1)/2), the largest g the formula is claimed for.
inline std::uint64_t max_theorem_g(int n) {
  return std::uint64_t{1} << ((n + 1) / 2);
}

inline bool in_theorem_range(int n, std::uint64_t g) {
  return n >= kTheoremMinDimension && g >= 1 && g <= max_theorem_g(n);
}

/// (n+1) g - ex_g(FQ_n) / 2. Evaluable for any 1 <= g < 2^n.
inline std::int64_t formula_value(int n, std::uint64_t g) {
  detail::require_dimension(n);
  if (g < 1 || g >= (std::uint64_t{1} << n)) {
    throw std::invalid_argument("g = " + std::to_string(g) +
                                " outside [1, 2^n - 1]");
  }
  return xi(g, n);
}

struct ConstructedCut {
  EdgeCut cut;
  ComponentProfile profile;
  VertexSet isolated;  // {0, ..., g-1}

  /// Vertex v < g in block v, everything else in block g.
  PartitionWitness partition(const CubeTopology& topo) const {
    const auto g = static_cast<int>(isolated.size());
    std::vector<int> blocks(topo.vertex_count(), g);
    for (Vertex v : isolated) blocks[v] = static_cast<int>(v);
    return PartitionWitness(std::move(blocks), g + 1);
  }
};

/// F = E(G_1) + E_{V(G_1)} with G_1 induced on {0, ..., g-1}.
inline ConstructedCut build_cut(int n, std::uint64_t g) {
  detail::require_dimension(n);
  if (n < kConstructionMinDimension) {
    throw std::invalid_argument("cut construction needs n >= 3");
  }
  if (g < 1 || g > max_theorem_g(n)) {
    throw std::invalid_argument("g = " + std::to_string(g) + " outside [1, " +
                                std::to_string(max_theorem_g(n)) + "]");
  }
  CubeTopology topo(n, true);
  ConstructedCut out;
  out.isolated = incomplete_set(g, IncompleteKind::LF, n);
  out.cut = induced_edges(topo, out.isolated)
                .united_with(boundary(topo, out.isolated));
  out.profile = components_after_removal(topo, out.cut);
  if (out.profile.count != g + 1 || out.profile.isolated_count != g) {
    throw ConstructionFailure(
        "cut for n = " + std::to_string(n) + ", g = " + std::to_string(g) +
        " left " + std::to_string(out.profile.count) + " components (" +
        std::to_string(out.profile.isolated_count) + " isolated), expected " +
        std::to_string(g + 1));
  }
  return out;
}

enum class OracleMethod { kGlobalMinCut, kPartitionSearch };

struct ClambdaResult {
  std::optional<std::uint64_t> value;
  std::optional<PartitionWitness> witness;
  bool exact = false;
  OracleMethod method = OracleMethod::kPartitionSearch;
  unsigned long long nodes = 0;
};

/// Whether exact_clambda accepts (n, k).
inline bool clambda_oracle_supported(int n, int k) {
  if (n < kMinDimension || k < 2) return false;
  if (k == 2) return n <= kGlobalMinCutMaxDimension;
  return n <= kPartitionSearchMaxDimension &&
         static_cast<std::size_t>(k) <= (std::size_t{1} << n);
}

/// Exact c_lambda_k(FQ_n). k = 2 goes through the global minimum cut; larger
/// k through the partition search, seeded with the explicit cut when one
/// exists for g = k - 1.
inline ClambdaResult exact_clambda(int n, int k, SearchBudget budget = {}) {
  detail::require_dimension(n);
  if (k < 2 || static_cast<std::size_t>(k) > (std::size_t{1} << n)) {
    throw std::invalid_argument("component count k = " + std::to_string(k) +
                                " outside [2, 2^n]");
  }
  if (!clambda_oracle_supported(n, k)) {
    throw UnsupportedScale("exact c_lambda_" + std::to_string(k) +
                           " is not supported at n = " + std::to_string(n));
  }
  CubeTopology topo(n, true);
  ClambdaResult result;

  if (k == 2) {
    GlobalMinCut cut = stoer_wagner_min_cut(topo);
    const int side_block = cut.side.contains(0) ? 0 : 1;
    std::vector<int> blocks(topo.vertex_count(), 1 - side_block);
    for (Vertex v : cut.side) blocks[v] = side_block;
    result.value = cut.value;
    result.witness = PartitionWitness(std::move(blocks), 2);
    result.exact = true;
    result.method = OracleMethod::kGlobalMinCut;
    return result;
  }

  std::optional<PartitionWitness> seed;
  const auto g = static_cast<std::uint64_t>(k - 1);
  if (n >= kConstructionMinDimension && g <= max_theorem_g(n)) {
    seed = build_cut(n, g).partition(topo);
  }
  PartitionSearchResult search = min_k_partition(topo, k, budget, seed);
  result.value = search.value;
  result.witness = std::move(search.witness);
  result.exact = search.exact;
  result.method = OracleMethod::kPartitionSearch;
  result.nodes = search.nodes;
  return result;
}

struct TheoremReport {
  int n = 0;
  std::uint64_t g = 0;
  std::int64_t formula_value = 0;
  std::uint64_t constructed_cut_size = 0;
  ComponentProfile component_profile;
  std::optional<std::uint64_t> oracle_value;
  bool oracle_exact = false;
  std::optional<std::size_t> oracle_isolated_count;
  bool in_theorem_range = false;

  bool formula_matches_cut() const {
    return formula_value >= 0 &&
           static_cast<std::uint64_t>(formula_value) == constructed_cut_size;
  }
  /// Empty unless an exact oracle value is available.
  std::optional<bool> oracle_matches_formula() const {
    if (!oracle_value || !oracle_exact) return std::nullopt;
    return formula_value >= 0 &&
           *oracle_value == static_cast<std::uint64_t>(formula_value);
  }
  bool cut_isolates_g() const {
    return component_profile.isolated_count == g;
  }
  std::optional<bool> oracle_isolates_g() const {
    if (!oracle_isolated_count) return std::nullopt;
    return *oracle_isolated_count == g;
  }
  bool oracle_within_upper_bound() const {
    return !oracle_exact || !oracle_value ||
           constructed_cut_size >= *oracle_value;
  }
  bool matches() const {
    return formula_matches_cut() && oracle_matches_formula().value_or(true);
  }
};

/// Builds the cut for (n, g) and, if asked and supported, runs the exact
/// oracle for k = g + 1. Rows with n < 5 carry in_theorem_range = false and
/// are informational.
inline TheoremReport verify_theorem(int n, std::uint64_t g, bool with_oracle,
                                    SearchBudget budget = {}) {
  ConstructedCut cut = build_cut(n, g);
  TheoremReport report;
  report.n = n;
  report.g = g;
  report.formula_value = formula_value(n, g);
  report.constructed_cut_size = cut.cut.size();
  report.component_profile = cut.profile;
  report.in_theorem_range = in_theorem_range(n, g);

  const int k = static_cast<int>(g + 1);
  if (with_oracle && clambda_oracle_supported(n, k)) {
    ClambdaResult oracle = exact_clambda(n, k, budget);
    report.oracle_value = oracle.value;
    report.oracle_exact = oracle.exact;
    if (oracle.witness) {
      CubeTopology topo(n, true);
      report.oracle_isolated_count =
          components_after_removal(topo, oracle.witness->cross_edges(topo))
              .isolated_count;
    }
  }
  return report;
}

}  // namespace fqcut
