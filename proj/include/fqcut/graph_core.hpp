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

// Bit-labelled hypercube Q_n and folded hypercube FQ_n.
//
// Vertex v is the integer whose binary expansion u_n ... u_1 is the vertex
// string, so v = sum u_i 2^(i-1). Two vertices of Q_n are adjacent when their
// labels differ in one bit; FQ_n adds the perfect matching v <-> ~v. Nothing
// is materialized: adjacency is a couple of XORs.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace fqcut {

using Vertex = std::uint32_t;

inline constexpr int kMinDimension = 2;
inline constexpr int kMaxDimension = 20;

/// Dimension tag of a matching edge (v, ~v). Cube edges carry 1..n.
inline constexpr int kComplementDimension = 0;

class CubeTopology {
 public:
  CubeTopology(int n, bool folded) : n_(n), folded_(folded) {
    if (n < kMinDimension || n > kMaxDimension) {
      throw std::invalid_argument("dimension must lie in [" +
                                  std::to_string(kMinDimension) + ", " +
                                  std::to_string(kMaxDimension) + "], got " +
                                  std::to_string(n));
    }
  }

  int dimension() const { return n_; }
  bool folded() const { return folded_; }
  std::size_t vertex_count() const { return std::size_t{1} << n_; }
  std::size_t edge_count() const {
    std::size_t half = vertex_count() / 2;
    return static_cast<std::size_t>(n_) * half + (folded_ ? half : 0);
  }
  int degree() const { return n_ + (folded_ ? 1 : 0); }

  /// All-ones label 2^n - 1.
  Vertex full_mask() const { return static_cast<Vertex>(vertex_count() - 1); }

  bool contains(Vertex v) const { return v < vertex_count(); }
  Vertex complement(Vertex v) const { return v ^ full_mask(); }

  /// True for the upper half D_1 (top bit set).
  bool in_upper_half(Vertex v) const { return (v >> (n_ - 1)) & 1U; }

  bool adjacent(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v) || u == v) return false;
    Vertex diff = u ^ v;
    if ((diff & (diff - 1)) == 0) return true;
    return folded_ && diff == full_mask();
  }

  /// Visits neighbours in ascending flip dimension, complement last.
  template <typename Fn>
  void for_each_neighbor(Vertex v, Fn&& fn) const {
    for (int i = 0; i < n_; ++i) fn(v ^ (Vertex{1} << i));
    if (folded_) fn(complement(v));
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    require_vertex(v);
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(degree()));
    for_each_neighbor(v, [&](Vertex w) { out.push_back(w); });
    return out;
  }

  void require_vertex(Vertex v) const {
    if (!contains(v)) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " outside [0, " +
                                  std::to_string(vertex_count()) + ")");
    }
  }

  bool operator==(const CubeTopology&) const = default;

 private:
  int n_;
  bool folded_;
};

inline CubeTopology build_topology(int n, bool folded) {
  return CubeTopology(n, folded);
}

/// Undirected edge in canonical form (u < v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;

  std::uint64_t key() const { return (std::uint64_t{u} << 32) | v; }
};

inline Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// Flip dimension in 1..n, or kComplementDimension for a matching edge.
inline int edge_dimension(const CubeTopology& topo, Edge e) {
  if (!topo.adjacent(e.u, e.v)) {
    throw std::invalid_argument("(" + std::to_string(e.u) + ", " +
                                std::to_string(e.v) + ") is not an edge");
  }
  Vertex diff = e.u ^ e.v;
  if ((diff & (diff - 1)) != 0) return kComplementDimension;
  int dim = 1;
  while ((diff >> (dim - 1)) != 1U) ++dim;
  return dim;
}

/// A set of distinct vertex labels, kept sorted.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
      throw std::invalid_argument("vertex set contains a duplicate member");
    }
  }

  VertexSet(std::initializer_list<Vertex> members)
      : VertexSet(std::vector<Vertex>(members)) {}

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::span<const Vertex> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

  /// Membership bitmap over [0, vertex_count).
  std::vector<char> indicator(std::size_t vertex_count) const {
    std::vector<char> mask(vertex_count, 0);
    for (Vertex v : members_) mask.at(v) = 1;
    return mask;
  }

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<Vertex> members_;
};

inline void require_subset(const CubeTopology& topo, const VertexSet& x) {
  if (!x.empty()) topo.require_vertex(x.members().back());
}

/// A set of topology edges in canonical sorted order.
class EdgeCut {
 public:
  EdgeCut() = default;

  EdgeCut(const CubeTopology& topo, std::vector<Edge> edges) {
    for (Edge& e : edges) {
      e = make_edge(e.u, e.v);
      if (!topo.adjacent(e.u, e.v)) {
        throw std::invalid_argument("(" + std::to_string(e.u) + ", " +
                                    std::to_string(e.v) +
                                    ") is not an edge of the topology");
      }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
  }

  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  std::span<const Edge> edges() const { return edges_; }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  bool contains(Edge e) const {
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(e.u, e.v));
  }

  EdgeCut united_with(const EdgeCut& other) const {
    EdgeCut out;
    std::set_union(edges_.begin(), edges_.end(), other.edges_.begin(),
                   other.edges_.end(), std::back_inserter(out.edges_));
    return out;
  }

  bool operator==(const EdgeCut&) const = default;

 private:
  std::vector<Edge> edges_;
};

struct ComponentProfile {
  std::size_t count = 0;
  std::vector<std::size_t> sizes;  // descending
  std::size_t isolated_count = 0;

  bool operator==(const ComponentProfile&) const = default;
};

/// 2 |E(G[X])|.
inline std::uint64_t induced_degree_sum(const CubeTopology& topo,
                                        const VertexSet& x) {
  require_subset(topo, x);
  std::vector<char> in = x.indicator(topo.vertex_count());
  std::uint64_t sum = 0;
  for (Vertex v : x) {
    topo.for_each_neighbor(v, [&](Vertex w) { sum += in[w] ? 1 : 0; });
  }
  return sum;
}

/// Edges of G[X].
inline EdgeCut induced_edges(const CubeTopology& topo, const VertexSet& x) {
  require_subset(topo, x);
  std::vector<char> in = x.indicator(topo.vertex_count());
  std::vector<Edge> edges;
  for (Vertex v : x) {
    topo.for_each_neighbor(v, [&](Vertex w) {
      if (in[w] && v < w) edges.push_back(Edge{v, w});
    });
  }
  return EdgeCut(topo, std::move(edges));
}

/// E_X: edges with exactly one endpoint in X.
inline EdgeCut boundary(const CubeTopology& topo, const VertexSet& x) {
  require_subset(topo, x);
  if (x.empty() || x.size() == topo.vertex_count()) {
    throw std::invalid_argument("boundary needs a nonempty proper subset");
  }
  std::vector<char> in = x.indicator(topo.vertex_count());
  std::vector<Edge> edges;
  edges.reserve(x.size() * static_cast<std::size_t>(topo.degree()));
  for (Vertex v : x) {
    topo.for_each_neighbor(v, [&](Vertex w) {
      if (!in[w]) edges.push_back(make_edge(v, w));
    });
  }
  return EdgeCut(topo, std::move(edges));
}

/// Connected components of the topology with `cut` deleted.
inline ComponentProfile components_after_removal(const CubeTopology& topo,
                                                 const EdgeCut& cut) {
  std::unordered_set<std::uint64_t> removed;
  removed.reserve(cut.size() * 2);
  for (Edge e : cut) removed.insert(e.key());

  const std::size_t count = topo.vertex_count();
  std::vector<char> seen(count, 0);
  std::vector<Vertex> stack;
  ComponentProfile profile;
  for (Vertex root = 0; root < count; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    stack.push_back(root);
    std::size_t size = 0;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      ++size;
      topo.for_each_neighbor(v, [&](Vertex w) {
        if (seen[w]) return;
        if (!removed.empty() && removed.count(make_edge(v, w).key())) return;
        seen[w] = 1;
        stack.push_back(w);
      });
    }
    profile.sizes.push_back(size);
  }
  std::sort(profile.sizes.begin(), profile.sizes.end(), std::greater<>());
  profile.count = profile.sizes.size();
  profile.isolated_count = static_cast<std::size_t>(
      std::count(profile.sizes.begin(), profile.sizes.end(), std::size_t{1}));
  return profile;
}

}  // namespace fqcut
