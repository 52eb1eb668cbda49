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

// Exact maximizer of the induced edge count over all m-subsets.
//
// Nothing here consults the closed forms in extremal.hpp. Small cubes
// (2^n <= 16) are enumerated outright; n = 5, 6 use a branch-and-bound that
// proves optimality by exhaustion.

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "fqcut/errors.hpp"
#include "fqcut/extremal.hpp"
#include "fqcut/graph_core.hpp"

namespace fqcut {

struct ExOracleResult {
  ExValue value;      // best degree sum found
  VertexSet witness;  // one set attaining it
  bool exact = false; // false: budget ran out, value is only a lower bound
  unsigned long long nodes = 0;
};

inline constexpr int kExOracleEnumerationMaxDimension = 4;
inline constexpr int kExOracleMaxDimension = 6;

namespace detail {

inline std::vector<std::uint64_t> neighbor_masks(const CubeTopology& topo) {
  std::vector<std::uint64_t> masks(topo.vertex_count(), 0);
  for (Vertex v = 0; v < topo.vertex_count(); ++v) {
    topo.for_each_neighbor(v, [&](Vertex w) { masks[v] |= std::uint64_t{1} << w; });
  }
  return masks;
}

inline std::uint64_t mask_edges(const std::vector<std::uint64_t>& nbr,
                                std::uint64_t set) {
  std::uint64_t twice = 0;
  for (std::uint64_t rest = set; rest != 0; rest &= rest - 1) {
    twice += static_cast<std::uint64_t>(std::popcount(nbr[std::countr_zero(rest)] & set));
  }
  return twice / 2;
}

inline VertexSet mask_to_set(std::uint64_t set) {
  std::vector<Vertex> members;
  for (std::uint64_t rest = set; rest != 0; rest &= rest - 1) {
    members.push_back(static_cast<Vertex>(std::countr_zero(rest)));
  }
  return VertexSet(std::move(members));
}

class DenseSubsetSearch {
 public:
  DenseSubsetSearch(const CubeTopology& topo, unsigned m, SearchBudget budget)
      : nbr_(neighbor_masks(topo)),
        count_(static_cast<unsigned>(topo.vertex_count())),
        degree_(static_cast<unsigned>(topo.degree())),
        m_(m),
        budget_(budget) {
    // Seed with the label prefix {0, ..., m-1}.
    best_set_ = m_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m_) - 1;
    best_edges_ = mask_edges(nbr_, best_set_);
  }

  void run() {
    // Both graphs are vertex-transitive (XOR by a constant is an
    // automorphism), so some optimum contains vertex 0.
    if (m_ == count_) {
      exhausted_ = true;
      return;
    }
    recurse(1, std::uint64_t{1}, 1, 0);
    exhausted_ = !out_of_budget_;
  }

  std::uint64_t best_edges() const { return best_edges_; }
  std::uint64_t best_set() const { return best_set_; }
  bool exhausted() const { return exhausted_; }
  unsigned long long nodes() const { return nodes_; }

 private:
  void recurse(unsigned next, std::uint64_t chosen, unsigned size,
               std::uint64_t edges) {
    if (out_of_budget_) return;
    if (++nodes_ > budget_.max_nodes) {
      out_of_budget_ = true;
      return;
    }
    if (size == m_) {
      if (edges > best_edges_) {
        best_edges_ = edges;
        best_set_ = chosen;
      }
      return;
    }
    const unsigned need = m_ - size;
    if (count_ - next < need) return;

    // Upper bound: each pick gains at most its links into `chosen` (take the
    // `need` largest), plus whatever the picks share among themselves.
    std::array<unsigned, 65> histogram{};
    for (unsigned u = next; u < count_; ++u) {
      ++histogram[std::popcount(nbr_[u] & chosen)];
    }
    std::uint64_t gain = 0;
    unsigned taken = 0;
    for (int c = static_cast<int>(degree_); c >= 0 && taken < need; --c) {
      unsigned use = std::min(histogram[c], need - taken);
      gain += static_cast<std::uint64_t>(use) * static_cast<unsigned>(c);
      taken += use;
    }
    const std::uint64_t internal =
        std::min<std::uint64_t>(std::uint64_t{need} * (need - 1) / 2,
                                std::uint64_t{need} * degree_ / 2);
    if (edges + gain + internal <= best_edges_) return;

    const std::uint64_t bit = std::uint64_t{1} << next;
    recurse(next + 1, chosen | bit, size + 1,
            edges + static_cast<std::uint64_t>(std::popcount(nbr_[next] & chosen)));
    recurse(next + 1, chosen, size, edges);
  }

  std::vector<std::uint64_t> nbr_;
  unsigned count_;
  unsigned degree_;
  unsigned m_;
  SearchBudget budget_;
  std::uint64_t best_set_ = 0;
  std::uint64_t best_edges_ = 0;
  unsigned long long nodes_ = 0;
  bool out_of_budget_ = false;
  bool exhausted_ = false;
};

}  // namespace detail

/// Exact ex_m by search. Full enumeration for n <= 4, branch-and-bound for
/// n = 5, 6; larger cubes throw UnsupportedScale.
inline ExOracleResult ex_oracle(std::uint64_t m, int n, bool folded,
                                SearchBudget budget = {}) {
  detail::require_set_size(m, n);
  if (n > kExOracleMaxDimension) {
    throw UnsupportedScale("ex oracle supports n <= " +
                           std::to_string(kExOracleMaxDimension));
  }
  CubeTopology topo(n, folded);
  ExOracleResult result;
  result.value = ExValue{m, n, folded, 0};

  if (n <= kExOracleEnumerationMaxDimension) {
    const auto nbr = detail::neighbor_masks(topo);
    const unsigned count = static_cast<unsigned>(topo.vertex_count());
    const std::uint64_t limit = std::uint64_t{1} << count;
    std::uint64_t best_set = 0;
    std::uint64_t best_edges = 0;
    bool first = true;
    bool complete = true;
    // Gosper's hack: all count-bit masks with exactly m bits set, ascending.
    for (std::uint64_t set = (std::uint64_t{1} << m) - 1; set < limit;) {
      if (++result.nodes > budget.max_nodes) {
        complete = false;
        break;
      }
      std::uint64_t edges = detail::mask_edges(nbr, set);
      if (first || edges > best_edges) {
        best_edges = edges;
        best_set = set;
        first = false;
      }
      std::uint64_t low = set & (~set + 1);
      std::uint64_t ripple = set + low;
      set = (((ripple ^ set) >> 2) / low) | ripple;
    }
    result.value.degree_sum = 2 * best_edges;
    result.witness = detail::mask_to_set(best_set);
    result.exact = complete;
    return result;
  }

  detail::DenseSubsetSearch search(topo, static_cast<unsigned>(m), budget);
  search.run();
  result.value.degree_sum = 2 * search.best_edges();
  result.witness = detail::mask_to_set(search.best_set());
  result.exact = search.exhausted();
  result.nodes = search.nodes();
  return result;
}

}  // namespace fqcut
