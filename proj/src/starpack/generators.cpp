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

#include "starpack/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "starpack/error.hpp"

namespace starpack {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool Rng::chance(double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return u < p;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    Vertex a = perm[static_cast<std::size_t>(u)];
    Vertex b = perm[static_cast<std::size_t>(v)];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  return Graph(g.vertex_count(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const auto shift = static_cast<Vertex>(a.vertex_count());
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(a.vertex_count() + b.vertex_count(), edges);
}

Graph join(const Graph& a, const Graph& b) {
  const auto shift = static_cast<Vertex>(a.vertex_count());
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  for (Vertex u = 0; u < shift; ++u) {
    for (std::size_t v = 0; v < b.vertex_count(); ++v) edges.emplace_back(u, shift + static_cast<Vertex>(v));
  }
  return Graph(a.vertex_count() + b.vertex_count(), edges);
}

namespace {

std::vector<Vertex> random_permutation(std::size_t n, Rng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  return perm;
}

// Builds the cograph on vertices [first, first + n) into `edges`.
void cograph_block(Vertex first, std::size_t n, double join_probability, Rng& rng, std::vector<Edge>& edges) {
  if (n <= 1) return;
  const auto left = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(n) - 1));
  const bool join = rng.chance(join_probability);
  cograph_block(first, left, join_probability, rng, edges);
  cograph_block(first + static_cast<Vertex>(left), n - left, join_probability, rng, edges);
  if (!join) return;
  for (Vertex u = first; u < first + static_cast<Vertex>(left); ++u) {
    for (Vertex v = first + static_cast<Vertex>(left); v < first + static_cast<Vertex>(n); ++v) edges.emplace_back(u, v);
  }
}

}  // namespace

Graph random_cograph(std::size_t n, std::uint64_t seed, double join_probability) {
  Rng rng(seed);
  std::vector<Edge> edges;
  cograph_block(0, n, join_probability, rng, edges);
  return relabel(Graph(n, edges), random_permutation(n, rng));
}

Graph random_split(std::size_t n, std::uint64_t seed, std::size_t clique_size, double cross_probability) {
  Rng rng(seed);
  if (clique_size > n) throw InputError("clique size exceeds vertex count");
  const std::size_t c = clique_size != 0 || n == 0 ? clique_size : static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(n)));
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < c; ++u) {
    for (std::size_t v = u + 1; v < c; ++v) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  for (std::size_t u = 0; u < c; ++u) {
    for (std::size_t v = c; v < n; ++v) {
      if (rng.chance(cross_probability)) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return relabel(Graph(n, edges), random_permutation(n, rng));
}

Graph disjoint_stars(std::size_t count, int r, double noise, std::uint64_t seed) {
  if (r < 1) throw InputError("star arity r must be at least 1");
  Rng rng(seed);
  const std::size_t block = static_cast<std::size_t>(r) + 1;
  std::vector<Edge> edges;
  for (std::size_t s = 0; s < count; ++s) {
    auto center = static_cast<Vertex>(s * block);
    for (int j = 1; j <= r; ++j) edges.emplace_back(center, center + j);
  }
  if (noise > 0.0 && count > 0) {
    auto center = static_cast<Vertex>(rng.below(count) * block);
    for (int i = 1; i <= r; ++i) {
      for (int j = i + 1; j <= r; ++j) {
        if (rng.chance(noise)) edges.emplace_back(center + i, center + j);
      }
    }
  }
  return relabel(Graph(count * block, edges), random_permutation(count * block, rng));
}

Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.chance(p)) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return Graph(n, edges);
}

ThreeDMInstance random_3dm(int k, std::size_t m, std::uint64_t seed, bool planted) {
  if (k < 1) throw InputError("3DM partite size k must be at least 1");
  const auto universe = static_cast<std::size_t>(k) * static_cast<std::size_t>(k) * static_cast<std::size_t>(k);
  if (m > universe) throw InputError("cannot draw " + std::to_string(m) + " distinct triples from " + std::to_string(universe));
  if (planted && m < static_cast<std::size_t>(k)) throw InputError("a planted matching needs m >= k");
  Rng rng(seed);
  ThreeDMInstance inst{k, {}};
  std::set<Triple> seen;
  if (planted) {
    std::vector<int> pb(static_cast<std::size_t>(k)), pc(static_cast<std::size_t>(k));
    std::iota(pb.begin(), pb.end(), 0);
    std::iota(pc.begin(), pc.end(), 0);
    rng.shuffle(pb);
    rng.shuffle(pc);
    for (int a = 0; a < k; ++a) {
      Triple t{a, pb[static_cast<std::size_t>(a)], pc[static_cast<std::size_t>(a)]};
      seen.insert(t);
      inst.triples.push_back(t);
    }
  }
  while (inst.triples.size() < m) {
    Triple t{static_cast<int>(rng.below(static_cast<std::uint64_t>(k))), static_cast<int>(rng.below(static_cast<std::uint64_t>(k))),
             static_cast<int>(rng.below(static_cast<std::uint64_t>(k)))};
    if (seen.insert(t).second) inst.triples.push_back(t);
  }
  if (planted) {
    // Hide the planted triples among the others.
    rng.shuffle(inst.triples);
  }
  return inst;
}

}  // namespace starpack
