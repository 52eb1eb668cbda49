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

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "fqcut/errors.hpp"
#include "fqcut/graph_core.hpp"

namespace fqcut {

inline constexpr int kGlobalMinCutMaxDimension = 10;

struct GlobalMinCut {
  std::uint64_t value = 0;
  VertexSet side;  // one shore of an optimal cut
};

// Stoer-Wagner on a dense weight matrix. O(V^3), which is about 10^9 simple
// steps at n = 10.
inline GlobalMinCut stoer_wagner_min_cut(const CubeTopology& topo) {
  if (topo.dimension() > kGlobalMinCutMaxDimension) {
    throw UnsupportedScale("global min cut supports n <= " +
                           std::to_string(kGlobalMinCutMaxDimension));
  }
  const std::size_t count = topo.vertex_count();
  std::vector<std::uint32_t> weight(count * count, 0);
  for (Vertex v = 0; v < count; ++v) {
    topo.for_each_neighbor(v, [&](Vertex w) { weight[v * count + w] = 1; });
  }
  // members[i]: original vertices merged into super-vertex i.
  std::vector<std::vector<Vertex>> members(count);
  for (Vertex v = 0; v < count; ++v) members[v] = {v};
  std::vector<std::size_t> alive(count);
  for (std::size_t i = 0; i < count; ++i) alive[i] = i;

  GlobalMinCut best;
  best.value = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> attach(count);
  std::vector<char> added(count);

  while (alive.size() > 1) {
    std::fill(attach.begin(), attach.end(), 0);
    std::fill(added.begin(), added.end(), 0);
    std::size_t prev = alive[0];
    std::size_t last = alive[0];
    for (std::size_t step = 0; step < alive.size(); ++step) {
      std::size_t pick = count;
      for (std::size_t v : alive) {
        if (!added[v] && (pick == count || attach[v] > attach[pick])) pick = v;
      }
      added[pick] = 1;
      prev = last;
      last = pick;
      if (step + 1 == alive.size()) {
        if (attach[pick] < best.value) {
          best.value = attach[pick];
          best.side = VertexSet(members[pick]);
        }
        break;
      }
      for (std::size_t v : alive) {
        if (!added[v]) attach[v] += weight[pick * count + v];
      }
    }
    // Merge `last` into `prev`.
    for (std::size_t v : alive) {
      weight[prev * count + v] += weight[last * count + v];
      weight[v * count + prev] = weight[prev * count + v];
    }
    weight[prev * count + prev] = 0;
    members[prev].insert(members[prev].end(), members[last].begin(),
                         members[last].end());
    std::erase(alive, last);
  }
  return best;
}

}  // namespace fqcut
