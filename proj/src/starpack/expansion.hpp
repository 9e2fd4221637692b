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
#include <optional>
#include <utility>
#include <vector>

#include "starpack/graph.hpp"
#include "starpack/packing.hpp"

namespace starpack {

// The bipartite graph between two disjoint vertex sets of a host graph. Only
// X-Y edges are visible; edges inside either side are ignored. The view
// borrows the host, which must outlive it.
class BipartiteView {
 public:
  // Throws InputError when the sides overlap, repeat a vertex or leave the
  // host's range.
  BipartiteView(const Graph& host, VertexSet x_side, VertexSet y_side);

  const Graph& host() const noexcept { return *host_; }
  const VertexSet& x_side() const noexcept { return x_; }
  const VertexSet& y_side() const noexcept { return y_; }

  // For the i-th X vertex, indices into y_side() of its neighbors.
  const std::vector<std::vector<int>>& x_adjacency() const noexcept { return x_adj_; }
  // Per Y vertex, how many X neighbors it has.
  const std::vector<int>& y_degrees() const noexcept { return y_deg_; }

 private:
  const Graph* host_;
  VertexSet x_;
  VertexSet y_;
  std::vector<std::vector<int>> x_adj_;
  std::vector<int> y_deg_;
};

// (x, y) host-vertex pairs.
using Matching = std::vector<std::pair<Vertex, Vertex>>;

// Maximum-cardinality X-Y matching by augmenting paths.
Matching max_matching(const BipartiteView& bv);

struct Expansion {
  VertexSet s;  // centers, subset of X
  VertexSet t;  // subset of Y with N(t) ⊆ s inside the view
  StarPacking stars;  // one r-star per vertex of s, leaves in t
};

// Nonempty S ⊆ X, T ⊆ Y such that S has |S| disjoint r-stars with leaves in T
// and every X-neighbor of T lies in S. Requires r >= 1, no isolated Y vertex
// and |Y| > r * (maximum matching size); throws InputError naming the failed
// precondition otherwise.
Expansion expansion(const BipartiteView& bv, int r);

// |X| disjoint r-stars with centers X (one each) and leaves in Y, found by
// an r-fold matching; nothing when X does not have |X| r-stars in Y.
std::optional<StarPacking> stars_into(const BipartiteView& bv, int r);

struct ExpansionPartition {
  VertexSet a1, b1;  // partition of X
  VertexSet a2, b2;  // partition of Y
  StarPacking stars;  // |b1| r-stars, centers b1, leaves in b2
  int iterations = 0;  // expansion rounds performed
};

// Partition with b1 having |b1| r-stars in b2, no edge between a1 and b2 and
// |a2| <= r|a1|. Repeatedly peels an expansion off the remaining graph;
// returns the trivial partition (a1 = X, a2 = Y) when |Y| <= r * matching.
// Requires no isolated Y vertex.
ExpansionPartition modified_expansion(const BipartiteView& bv, int r);

}  // namespace starpack
