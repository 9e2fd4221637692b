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

#include <cstddef>
#include <span>
#include <vector>

#include "starpack/graph.hpp"

namespace starpack {

// A copy of K_{1,r}: a center and r leaves adjacent to it. Leaves may be
// adjacent to each other in the host graph.
struct Star {
  Vertex center = 0;
  std::vector<Vertex> leaves;

  friend bool operator==(const Star&, const Star&) = default;
};

struct StarPacking {
  std::vector<Star> stars;

  std::size_t size() const noexcept { return stars.size(); }
  bool empty() const noexcept { return stars.empty(); }
  // Every vertex used by some star, sorted.
  VertexSet vertices() const;

  friend bool operator==(const StarPacking&, const StarPacking&) = default;
};

// True iff every star has exactly r leaves adjacent to its center, all
// vertices are in range and the stars are pairwise vertex-disjoint. Never
// throws; r < 1 yields false.
bool validate_packing(const Graph& g, const StarPacking& p, int r);

// Scans vertices in ascending order; a vertex with at least r unused
// neighbors becomes a center with its r smallest unused neighbors as leaves.
// One pass is enough: unused-neighbor counts only shrink, so a vertex skipped
// once can never qualify later.
StarPacking greedy_maximal_packing(const Graph& g, int r);

struct OptimalPacking {
  int count = 0;
  StarPacking witness;
};

// Exact maximum r-star packing by memoized branch and bound over vertex
// subsets. Exponential; intended for n <= ~24. Throws LimitError beyond 64
// vertices.
OptimalPacking optimal_packing(const Graph& g, int r);

// Does g contain an r-star using a vertex of l? Such a star exists iff some
// vertex of l ∪ N(l) has degree >= r.
bool star_exists_intersecting(const Graph& g, std::span<const Vertex> l, int r);

// Maps a packing of an induced subgraph back to host vertex ids.
StarPacking lift_packing(const StarPacking& p, std::span<const Vertex> original);

}  // namespace starpack
