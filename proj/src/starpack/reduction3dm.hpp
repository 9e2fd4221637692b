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
#include <vector>

#include "starpack/graph.hpp"

namespace starpack {

// Coordinates are 0-based indices into V1, V2, V3.
struct Triple {
  int a = 0, b = 0, c = 0;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// 3-Dimensional Matching: three partite sets of size k and a list of triples.
struct ThreeDMInstance {
  int k = 0;
  std::vector<Triple> triples;

  std::size_t m() const noexcept { return triples.size(); }

  // Throws InputError for k < 1, coordinates outside [0, k) or repeated
  // triples.
  void validate() const;

  friend bool operator==(const ThreeDMInstance&, const ThreeDMInstance&) = default;
};

enum class GadgetRole { v1, v2, v3, x1, x2, y, w };

const char* to_string(GadgetRole role);

// Split graph built from a 3DM instance. Vertices are laid out in blocks
// V1, V2, V3, X1, X2, Y, W.
struct GadgetGraph {
  Graph graph;
  std::vector<GadgetRole> roles;
  std::vector<int> triple_of;  // X1 vertex -> triple index, -1 elsewhere
  VertexSet clique;            // X1 ∪ X2

  std::size_t count(GadgetRole role) const;
};

// |X1| = m, |X2| = m - k, |Y| = (m - k)(r - 1), |W| = k(r - 3); total m(r+1).
// X is a clique, each X1 vertex sees the three V vertices of its triple and
// all of W, and X2 vertex i owns Y vertices i(r-1) .. (i+1)(r-1)-1.
// Throws InputError for r < 3 or m < k.
GadgetGraph reduce_3dm(const ThreeDMInstance& inst, int r);

// Exhaustive search for k pairwise disjoint triples.
bool has_perfect_matching_3dm(const ThreeDMInstance& inst);

// Can V(g) be partitioned into copies of K_{1,r}? Exact-cover search that
// always branches on the uncovered vertex with the fewest options. Throws
// LimitError beyond 64 vertices.
bool has_perfect_star_partition(const Graph& g, int r);

}  // namespace starpack
