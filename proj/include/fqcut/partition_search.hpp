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

// Minimum k-way edge partition by exhaustive search.
//
// The minimum number of cross edges over partitions of V into exactly k
// nonempty blocks equals the k-component edge connectivity: deleting the
// cross edges leaves at least one component per block, and conversely the
// components left by any k-component cut can be merged down to k blocks
// without adding cross edges. Blocks need not be connected.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fqcut/errors.hpp"
#include "fqcut/graph_core.hpp"

namespace fqcut {

/// Assignment of every vertex to one of k nonempty blocks.
class PartitionWitness {
 public:
  PartitionWitness(std::vector<int> blocks, int block_count)
      : blocks_(std::move(blocks)), block_count_(block_count) {
    if (block_count_ < 1) throw std::invalid_argument("need at least one block");
    std::vector<char> used(static_cast<std::size_t>(block_count_), 0);
    for (int b : blocks_) {
      if (b < 0 || b >= block_count_) {
        throw std::invalid_argument("block index " + std::to_string(b) +
                                    " outside [0, " +
                                    std::to_string(block_count_) + ")");
      }
      used[static_cast<std::size_t>(b)] = 1;
    }
    if (std::count(used.begin(), used.end(), 0) != 0) {
      throw std::invalid_argument("every block must be nonempty");
    }
  }

  int block_count() const { return block_count_; }
  std::span<const int> blocks() const { return blocks_; }
  int block_of(Vertex v) const { return blocks_.at(v); }

  std::vector<std::size_t> block_sizes() const {
    std::vector<std::size_t> sizes(static_cast<std::size_t>(block_count_), 0);
    for (int b : blocks_) ++sizes[static_cast<std::size_t>(b)];
    return sizes;
  }

  EdgeCut cross_edges(const CubeTopology& topo) const {
    require_fits(topo);
    std::vector<Edge> edges;
    for (Vertex v = 0; v < topo.vertex_count(); ++v) {
      topo.for_each_neighbor(v, [&](Vertex w) {
        if (v < w && blocks_[v] != blocks_[w]) edges.push_back(Edge{v, w});
      });
    }
    return EdgeCut(topo, std::move(edges));
  }

  std::uint64_t cut_value(const CubeTopology& topo) const {
    require_fits(topo);
    std::uint64_t value = 0;
    for (Vertex v = 0; v < topo.vertex_count(); ++v) {
      topo.for_each_neighbor(v, [&](Vertex w) {
        if (v < w && blocks_[v] != blocks_[w]) ++value;
      });
    }
    return value;
  }

  bool operator==(const PartitionWitness&) const = default;

 private:
  void require_fits(const CubeTopology& topo) const {
    if (blocks_.size() != topo.vertex_count()) {
      throw std::invalid_argument("partition does not cover the topology");
    }
  }

  std::vector<int> blocks_;
  int block_count_;
};

struct PartitionSearchResult {
  std::optional<std::uint64_t> value;        // best cut found
  std::optional<PartitionWitness> witness;   // attains `value`
  bool exact = false;  // false: budget ran out, `value` is an upper bound
  unsigned long long nodes = 0;
};

inline constexpr int kPartitionSearchMaxDimension = 6;

namespace detail {

// Vertices are assigned in label order. A vertex may only open block b when
// blocks 0..b-1 are open, which removes the k! relabelings; vertex 0 lands in
// block 0. A node is pruned when
//   cut so far
//   + sum over unassigned v of (assigned neighbours of v outside v's best block)
//   + the cheapest surcharges for the blocks still to be opened
// cannot beat the incumbent. The per-vertex terms count disjoint edge sets
// (each links one unassigned vertex to the assigned prefix), so the sum is a
// valid lower bound.
class PartitionSearch {
 public:
  PartitionSearch(const CubeTopology& topo, int k, SearchBudget budget)
      : count_(static_cast<unsigned>(topo.vertex_count())),
        k_(static_cast<unsigned>(k)),
        budget_(budget),
        in_block_(static_cast<std::size_t>(count_) * k_, 0),
        assigned_degree_(count_, 0),
        blocks_(count_, 0) {
    adjacency_.resize(count_);
    for (Vertex v = 0; v < count_; ++v) adjacency_[v] = topo.neighbors(v);
  }

  void seed(std::uint64_t value, std::vector<int> blocks) {
    incumbent_ = value;
    best_blocks_ = std::move(blocks);
  }

  void run() {
    recurse(0, 0, 0);
    exhausted_ = !out_of_budget_;
  }

  bool found() const { return !best_blocks_.empty(); }
  std::uint64_t incumbent() const { return incumbent_; }
  const std::vector<int>& best_blocks() const { return best_blocks_; }
  bool exhausted() const { return exhausted_; }
  unsigned long long nodes() const { return nodes_; }

 private:
  unsigned& links(Vertex v, unsigned block) {
    return in_block_[static_cast<std::size_t>(v) * k_ + block];
  }

  void recurse(Vertex next, unsigned opened, std::uint64_t cut) {
    if (out_of_budget_) return;
    if (++nodes_ > budget_.max_nodes) {
      out_of_budget_ = true;
      return;
    }
    if (next == count_) {
      if (opened == k_ && cut < incumbent_) {
        incumbent_ = cut;
        best_blocks_ = blocks_;
      }
      return;
    }
    const unsigned need = k_ - opened;
    if (count_ - next < need) return;

    std::uint64_t bound = cut;
    surcharge_.clear();
    for (Vertex u = next; u < count_; ++u) {
      unsigned best = 0;
      for (unsigned b = 0; b < opened; ++b) best = std::max(best, links(u, b));
      bound += assigned_degree_[u] - best;
      if (need > 0) surcharge_.push_back(best);
    }
    if (need > 0) {
      std::partial_sort(surcharge_.begin(), surcharge_.begin() + need,
                        surcharge_.end());
      for (unsigned i = 0; i < need; ++i) bound += surcharge_[i];
    }
    if (bound >= incumbent_) return;

    const unsigned limit = std::min(opened + 1, k_);
    for (unsigned b = 0; b < limit; ++b) {
      const std::uint64_t added =
          assigned_degree_[next] - (b < opened ? links(next, b) : 0U);
      if (cut + added >= incumbent_) continue;
      blocks_[next] = static_cast<int>(b);
      for (Vertex w : adjacency_[next]) {
        if (w > next) {
          ++links(w, b);
          ++assigned_degree_[w];
        }
      }
      recurse(next + 1, std::max(opened, b + 1), cut + added);
      for (Vertex w : adjacency_[next]) {
        if (w > next) {
          --links(w, b);
          --assigned_degree_[w];
        }
      }
      if (out_of_budget_) return;
    }
  }

  unsigned count_;
  unsigned k_;
  SearchBudget budget_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<unsigned> in_block_;
  std::vector<unsigned> assigned_degree_;
  std::vector<int> blocks_;
  std::vector<unsigned> surcharge_;
  std::vector<int> best_blocks_;
  std::uint64_t incumbent_ = std::numeric_limits<std::uint64_t>::max();
  unsigned long long nodes_ = 0;
  bool out_of_budget_ = false;
  bool exhausted_ = false;
};

}  // namespace detail

/// Minimum cross-edge count over partitions into exactly k nonempty blocks.
/// With a seed, only strictly better partitions are searched for; the seed is
/// returned when none exists.
inline PartitionSearchResult min_k_partition(
    const CubeTopology& topo, int k, SearchBudget budget = {},
    const std::optional<PartitionWitness>& seed = std::nullopt) {
  if (topo.dimension() > kPartitionSearchMaxDimension) {
    throw UnsupportedScale("partition search supports n <= " +
                           std::to_string(kPartitionSearchMaxDimension));
  }
  if (k < 1 || static_cast<std::size_t>(k) > topo.vertex_count()) {
    throw std::invalid_argument("block count " + std::to_string(k) +
                                " outside [1, 2^n]");
  }
  detail::PartitionSearch search(topo, k, budget);
  if (seed) {
    if (seed->block_count() != k) {
      throw std::invalid_argument("seed partition has the wrong block count");
    }
    search.seed(seed->cut_value(topo),
                std::vector<int>(seed->blocks().begin(), seed->blocks().end()));
  }
  search.run();

  PartitionSearchResult result;
  result.exact = search.exhausted();
  result.nodes = search.nodes();
  if (search.found()) {
    result.value = search.incumbent();
    result.witness = PartitionWitness(search.best_blocks(), k);
  }
  return result;
}

struct OptimalPartitions {
  std::uint64_t value = 0;
  std::vector<PartitionWitness> partitions;
  std::vector<std::size_t> isolated_counts;  // parallel to `partitions`
};

inline constexpr int kOptimalEnumerationDimension = 3;

/// Every partition of FQ_3 into exactly k blocks with the minimum cut value,
/// in first-occurrence canonical form, with the isolated-vertex count left by
/// deleting its cross edges.
inline OptimalPartitions enumerate_optimal_cuts(int n, int k) {
  if (n != kOptimalEnumerationDimension) {
    throw UnsupportedScale("optimal-cut enumeration supports n = 3 only");
  }
  CubeTopology topo(n, true);
  const std::size_t count = topo.vertex_count();
  if (k < 2 || static_cast<std::size_t>(k) > count) {
    throw std::invalid_argument("block count " + std::to_string(k) +
                                " outside [2, " + std::to_string(count) + "]");
  }

  OptimalPartitions out;
  out.value = std::numeric_limits<std::uint64_t>::max();
  std::vector<int> blocks(count, 0);
  // Restricted growth strings: blocks[i] <= 1 + max(blocks[0..i-1]).
  auto visit = [&](auto&& self, std::size_t i, int opened) -> void {
    if (static_cast<int>(count - i) < k - opened) return;
    if (i == count) {
      PartitionWitness p(blocks, k);
      std::uint64_t value = p.cut_value(topo);
      if (value < out.value) {
        out.value = value;
        out.partitions.clear();
      }
      if (value == out.value) out.partitions.push_back(std::move(p));
      return;
    }
    for (int b = 0; b <= std::min(opened, k - 1); ++b) {
      blocks[i] = b;
      self(self, i + 1, std::max(opened, b + 1));
    }
  };
  visit(visit, 0, 0);

  for (const PartitionWitness& p : out.partitions) {
    out.isolated_counts.push_back(
        components_after_removal(topo, p.cross_edges(topo)).isolated_count);
  }
  return out;
}

}  // namespace fqcut
