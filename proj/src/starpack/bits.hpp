// Copyright 2026 The starpack Authors
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

// Small-graph helpers on 64-bit vertex masks, shared by the exact searches.

#include <bit>
#include <cstdint>
#include <vector>

#include "starpack/graph.hpp"

namespace starpack::bits {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

constexpr Mask all(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) adj[v] |= bit(w);
  }
  return adj;
}

// Calls f(acc | subset) for every `need`-element subset of `pool`, lowest
// bits first; f returns true to stop, and so does this function.
template <class F>
bool for_each_combination(Mask pool, int need, Mask acc, F&& f) {
  if (need == 0) return f(acc);
  if (std::popcount(pool) < need) return false;
  Mask low = pool & (~pool + 1);
  if (for_each_combination(pool & ~low, need - 1, acc | low, f)) return true;
  return for_each_combination(pool & ~low, need, acc, f);
}

}  // namespace starpack::bits
