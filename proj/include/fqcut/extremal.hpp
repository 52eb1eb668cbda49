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

// Edge-isoperimetric closed forms on Q_n and FQ_n.
//
// Throughout, ex_m is the maximum DEGREE SUM of an m-vertex induced subgraph,
// i.e. twice its edge count. Every closed form below is evaluated on the
// greedy (binary) decomposition m = 2^t_0 + ... + 2^t_s, t_0 > ... > t_s.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fqcut/graph_core.hpp"

namespace fqcut {

struct GreedyDecomposition {
  std::uint64_t m = 0;
  std::vector<int> exponents;  // strictly decreasing

  std::size_t term_count() const { return exponents.size(); }
  bool operator==(const GreedyDecomposition&) const = default;
};

inline GreedyDecomposition greedy_decompose(std::uint64_t m) {
  if (m < 1) throw std::invalid_argument("decomposition needs m >= 1");
  GreedyDecomposition d{m, {}};
  std::uint64_t rest = m;
  while (rest != 0) {
    // floor(log2(rest))
    int t = std::bit_width(rest) - 1;
    d.exponents.push_back(t);
    rest -= std::uint64_t{1} << t;
  }
  return d;
}

struct ExValue {
  std::uint64_t m = 0;
  int n = 0;
  bool folded = false;
  std::uint64_t degree_sum = 0;

  std::uint64_t edges() const { return degree_sum / 2; }
  bool operator==(const ExValue&) const = default;
};

namespace detail {

inline void require_dimension(int n) {
  if (n < kMinDimension || n > kMaxDimension) {
    throw std::invalid_argument("dimension must lie in [" +
                                std::to_string(kMinDimension) + ", " +
                                std::to_string(kMaxDimension) + "], got " +
                                std::to_string(n));
  }
}

inline void require_set_size(std::uint64_t m, int n) {
  require_dimension(n);
  if (m < 1 || m > (std::uint64_t{1} << n)) {
    throw std::invalid_argument("set size " + std::to_string(m) +
                                " outside [1, 2^" + std::to_string(n) + "]");
  }
}

inline std::uint64_t cube_closed_form(std::uint64_t m) {
  GreedyDecomposition d = greedy_decompose(m);
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < d.exponents.size(); ++i) {
    std::uint64_t block = std::uint64_t{1} << d.exponents[i];
    sum += static_cast<std::uint64_t>(d.exponents[i]) * block + 2 * i * block;
  }
  return sum;
}

}  // namespace detail

/// ex_m(Q_n).
inline ExValue ex_qn(std::uint64_t m, int n) {
  detail::require_set_size(m, n);
  return ExValue{m, n, false, detail::cube_closed_form(m)};
}

/// ex_m(FQ_n). Past half the cube, each complementary pair inside
/// {0, ..., m-1} adds one matching edge, i.e. 2 to the degree sum.
inline ExValue ex_fqn(std::uint64_t m, int n) {
  detail::require_set_size(m, n);
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  std::uint64_t sum = detail::cube_closed_form(m);
  if (m > half) sum += 2 * (m - half);
  return ExValue{m, n, true, sum};
}

inline ExValue ex_value(std::uint64_t m, int n, bool folded) {
  return folded ? ex_fqn(m, n) : ex_qn(m, n);
}

/// The second branch with the matching term counted once instead of twice,
/// as it is sometimes quoted. Odd for odd m - 2^(n-1), so never a degree sum;
/// kept only so reports can show where it disagrees.
inline std::uint64_t ex_fqn_single_count(std::uint64_t m, int n) {
  detail::require_set_size(m, n);
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  std::uint64_t sum = detail::cube_closed_form(m);
  if (m > half) sum += m - half;
  return sum;
}

/// xi(m) = (n+1) m - ex_m(FQ_n) / 2: the boundary of an extremal m-set.
inline std::int64_t xi(std::uint64_t m, int n) {
  ExValue ex = ex_fqn(m, n);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(n + 1) * m) -
         static_cast<std::int64_t>(ex.edges());
}

enum class IncompleteKind { L, R, LF, RF };

inline bool is_folded_kind(IncompleteKind kind) {
  return kind == IncompleteKind::LF || kind == IncompleteKind::RF;
}

/// L/LF: {0, ..., m-1}. R/RF: {2^n - 1, ..., 2^n - m}.
inline VertexSet incomplete_set(std::uint64_t m, IncompleteKind kind, int n) {
  detail::require_set_size(m, n);
  const Vertex top = static_cast<Vertex>((std::uint64_t{1} << n) - 1);
  std::vector<Vertex> members(m);
  const bool reverse = kind == IncompleteKind::R || kind == IncompleteKind::RF;
  for (std::uint64_t i = 0; i < m; ++i) {
    members[i] = reverse ? top - static_cast<Vertex>(i) : static_cast<Vertex>(i);
  }
  return VertexSet(std::move(members));
}

struct CheckResult {
  bool holds = false;
  std::int64_t slack = 0;
};

/// ex_{m0+m1}(Q_n) >= ex_{m0}(Q_n) + ex_{m1}(Q_n) + 2 m0 for m0 <= m1.
inline CheckResult check_superadditivity(std::uint64_t m0, std::uint64_t m1,
                                         int n) {
  detail::require_dimension(n);
  if (m0 < 1 || m0 > m1 || m0 + m1 > (std::uint64_t{1} << n)) {
    throw std::invalid_argument(
        "superadditivity needs 1 <= m0 <= m1 and m0 + m1 <= 2^n");
  }
  auto lhs = static_cast<std::int64_t>(ex_qn(m0 + m1, n).degree_sum);
  auto rhs = static_cast<std::int64_t>(ex_qn(m0, n).degree_sum +
                                       ex_qn(m1, n).degree_sum + 2 * m0);
  return {lhs >= rhs, lhs - rhs};
}

/// (n-1) m - ex_m(FQ_n) >= 0 for m <= 2^(n-1).
inline CheckResult check_sublinearity(std::uint64_t m, int n) {
  detail::require_dimension(n);
  if (m < 1 || m > (std::uint64_t{1} << (n - 1))) {
    throw std::invalid_argument("sublinearity needs 1 <= m <= 2^(n-1)");
  }
  auto slack = static_cast<std::int64_t>(static_cast<std::uint64_t>(n - 1) * m) -
               static_cast<std::int64_t>(ex_fqn(m, n).degree_sum);
  return {slack >= 0, slack};
}

/// sum ex_{m_i}(Q_n) <= ex_{m-r+1}(Q_n), m = sum m_i.
inline CheckResult check_merge_bound(std::span<const std::uint64_t> sizes,
                                     int n) {
  detail::require_dimension(n);
  if (sizes.empty()) throw std::invalid_argument("merge bound needs r >= 1");
  std::uint64_t total = 0;
  std::uint64_t lhs = 0;
  for (std::uint64_t s : sizes) {
    if (s < 1) throw std::invalid_argument("merge bound needs every m_i >= 1");
    total += s;
  }
  const std::uint64_t merged = total - sizes.size() + 1;
  if (merged > (std::uint64_t{1} << n)) {
    throw std::invalid_argument("merge bound needs m - r + 1 <= 2^n");
  }
  for (std::uint64_t s : sizes) lhs += ex_qn(s, n).degree_sum;
  auto slack = static_cast<std::int64_t>(ex_qn(merged, n).degree_sum) -
               static_cast<std::int64_t>(lhs);
  return {slack >= 0, slack};
}

/// Whether v -> ~v carries the induced subgraph on {0..m-1} edge for edge
/// onto the one on the top m labels.
inline bool check_isomorphism(std::uint64_t m, int n, bool folded) {
  detail::require_set_size(m, n);
  CubeTopology topo(n, folded);
  VertexSet low = incomplete_set(m, folded ? IncompleteKind::LF : IncompleteKind::L, n);
  VertexSet high = incomplete_set(m, folded ? IncompleteKind::RF : IncompleteKind::R, n);

  std::vector<Vertex> image;
  image.reserve(low.size());
  for (Vertex v : low) image.push_back(topo.complement(v));
  if (VertexSet(std::move(image)) != high) return false;

  EdgeCut low_edges = induced_edges(topo, low);
  std::vector<Edge> mapped;
  mapped.reserve(low_edges.size());
  for (Edge e : low_edges) {
    mapped.push_back(make_edge(topo.complement(e.u), topo.complement(e.v)));
  }
  return EdgeCut(topo, std::move(mapped)) == induced_edges(topo, high);
}

}  // namespace fqcut
