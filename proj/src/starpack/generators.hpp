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
#include <cstdint>
#include <random>
#include <vector>

#include "starpack/graph.hpp"
#include "starpack/reduction3dm.hpp"

namespace starpack {

// Seeded random source with portable draws. The standard distributions are
// implementation-defined, so bounded integers and probabilities are derived
// from the raw mt19937_64 stream directly; outputs are byte-identical across
// platforms for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  // True with probability p.
  bool chance(double p);

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

// P4-free by construction: the vertex budget is split recursively and the two
// halves are combined by disjoint union or by join (all cross edges), the
// latter with probability `join_probability`. Labels are shuffled.
Graph random_cograph(std::size_t n, std::uint64_t seed, double join_probability = 0.5);

// Clique of `clique_size` vertices (random in [1, n] when 0) plus an
// independent set, each cross pair present with probability `cross_probability`.
// Split graphs have no induced P5.
Graph random_split(std::size_t n, std::uint64_t seed, std::size_t clique_size = 0, double cross_probability = 0.5);

// `count` disjoint copies of K_{1,r}; with `noise` > 0, each leaf pair of one
// randomly chosen star is joined with that probability.
Graph disjoint_stars(std::size_t count, int r, double noise, std::uint64_t seed);

// Uniform random graph G(n, p): each pair is an edge with probability p.
Graph random_gnp(std::size_t n, double p, std::uint64_t seed);

// m distinct random triples over partite sets of size k. With `planted`, the
// first k triples form a perfect matching. Throws InputError when m exceeds
// k^3 or a planted matching cannot fit.
ThreeDMInstance random_3dm(int k, std::size_t m, std::uint64_t seed, bool planted = false);

// Cograph operations. Vertices of `b` follow those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);

// Applies a vertex relabeling: vertex v becomes perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace starpack
