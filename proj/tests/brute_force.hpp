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

// Test-only brute force. Deliberately naive: explicit edge lists built from
// the textual definition, no pruning, no symmetry breaking.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace fqcut::brute {

using EdgeList = std::vector<std::pair<unsigned, unsigned>>;

/// Edges of Q_n (strings differing in one position) plus, if folded, the
/// pairs of complementary strings.
inline EdgeList brute_edges(int n, bool folded) {
  const unsigned count = 1U << n;
  EdgeList edges;
  for (unsigned u = 0; u < count; ++u) {
    for (unsigned v = u + 1; v < count; ++v) {
      int differing = 0;
      for (int bit = 0; bit < n; ++bit) differing += ((u >> bit) & 1U) != ((v >> bit) & 1U);
      if (differing == 1 || (folded && differing == n)) edges.emplace_back(u, v);
    }
  }
  return edges;
}

/// Max over all m-subsets of 2 |E(G[X])|, by scanning every subset.
inline std::uint64_t brute_max_degree_sum(int n, bool folded, unsigned m) {
  const EdgeList edges = brute_edges(n, folded);
  const unsigned count = 1U << n;
  std::uint64_t best = 0;
  for (std::uint64_t set = 0; set < (std::uint64_t{1} << count); ++set) {
    if (static_cast<unsigned>(__builtin_popcountll(set)) != m) continue;
    std::uint64_t inside = 0;
    for (auto [u, v] : edges) inside += ((set >> u) & 1U) && ((set >> v) & 1U);
    best = std::max(best, 2 * inside);
  }
  return best;
}

/// Min cross edges over all surjective labelings into k blocks (every
/// labeling, not just canonical ones).
inline std::uint64_t brute_min_k_cut(int n, bool folded, int k) {
  const EdgeList edges = brute_edges(n, folded);
  const unsigned count = 1U << n;
  std::vector<int> label(count, 0);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  while (true) {
    std::vector<char> used(static_cast<std::size_t>(k), 0);
    for (int b : label) used[static_cast<std::size_t>(b)] = 1;
    if (std::all_of(used.begin(), used.end(), [](char c) { return c != 0; })) {
      std::uint64_t cut = 0;
      for (auto [u, v] : edges) cut += label[u] != label[v];
      best = std::min(best, cut);
    }
    unsigned i = 0;
    while (i < count && ++label[i] == k) label[i++] = 0;
    if (i == count) break;
  }
  return best;
}

}  // namespace fqcut::brute
