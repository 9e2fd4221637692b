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

// Instance families shared by the unit and acceptance tests.

#include <cstdint>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "starpack/generators.hpp"
#include "starpack/graph.hpp"

namespace family {

using starpack::Graph;
using starpack::Rng;

// A few hubs joined to large sparse pieces: a cograph whose packing number
// stays small while n grows, so the kernel's main loop has work to do.
inline Graph hub_cograph(std::uint64_t seed, std::size_t n_max) {
  Rng rng(seed);
  Graph g;
  const auto pieces = rng.between(1, 3);
  for (std::int64_t p = 0; p < pieces; ++p) {
    const auto a = static_cast<std::size_t>(rng.between(1, 3));
    const auto b = static_cast<std::size_t>(rng.between(20, 130));
    if (g.vertex_count() + a + b > n_max) break;
    Graph hub = starpack::random_cograph(a, rng.below(1u << 30), 0.5);
    Graph rim = starpack::random_cograph(b, rng.below(1u << 30), rng.chance(0.5) ? 0.0 : 0.02);
    g = starpack::disjoint_union(g, starpack::join(hub, rim));
  }
  if (rng.chance(0.5)) {
    // Some background noise of small dense components.
    const auto extra = std::min<std::size_t>(n_max - g.vertex_count(), static_cast<std::size_t>(rng.between(0, 40)));
    g = starpack::disjoint_union(g, starpack::random_cograph(extra, rng.below(1u << 30), 0.2));
  }
  return g;
}

// Small clique, large independent set, sparse cross edges: a split graph with
// a small packing number.
inline Graph hub_split(std::uint64_t seed, std::size_t n_max) {
  Rng rng(seed);
  const auto n = static_cast<std::size_t>(rng.between(40, static_cast<std::int64_t>(n_max)));
  const auto clique = static_cast<std::size_t>(rng.between(1, 9));
  const double cross = 0.01 * static_cast<double>(rng.between(1, 30));
  return starpack::random_split(n, rng.below(1u << 30), clique, cross);
}

struct Small {
  Graph g;
  int d;  // g has no induced P_d
  std::string kind;
};

// Mixed small graphs: cographs, split graphs, noisy stars, hubs and G(n, p).
// d is the smallest value for which the graph is P_d-free (at least 3).
inline Small small_mixed(std::uint64_t seed, std::size_t n_max) {
  Rng rng(seed);
  const auto n = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(n_max)));
  const std::uint64_t sub = rng.below(1u << 30);
  Small out;
  switch (rng.below(5)) {
    case 0:
      out = {starpack::random_cograph(n, sub, 0.2 + 0.6 * static_cast<double>(rng.below(100)) / 100.0), 4, "cograph"};
      break;
    case 1:
      out = {starpack::random_split(n, sub, 0, 0.2 + 0.6 * static_cast<double>(rng.below(100)) / 100.0), 5, "split"};
      break;
    case 2: {
      const int r = static_cast<int>(rng.between(2, 3));
      const auto count = std::max<std::size_t>(1, n / static_cast<std::size_t>(r + 1));
      out = {starpack::disjoint_stars(count, r, 0.5, sub), 0, "stars"};
      break;
    }
    case 3: {
      const auto a = static_cast<std::size_t>(rng.between(1, 2));
      const auto b = n > a ? n - a : 1;
      out = {starpack::join(starpack::random_cograph(a, sub, 0.5), starpack::random_cograph(b, sub + 1, 0.1)), 4, "hub"};
      break;
    }
    default:
      out = {starpack::random_gnp(n, 0.1 + 0.4 * static_cast<double>(rng.below(100)) / 100.0, sub), 0, "gnp"};
      break;
  }
  if (out.d == 0) out.d = std::max(3, oracle::longest_induced_path(out.g) + 1);
  return out;
}

// A host graph with disjoint sides X and Y and no isolated Y vertex. Edges
// inside the sides are present too; the bipartite view must ignore them.
struct Bipartite {
  Graph host;
  starpack::VertexSet x, y;
};

inline Bipartite bipartite(std::uint64_t seed, std::size_t x_max, std::size_t y_max) {
  Rng rng(seed);
  const auto nx = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(x_max)));
  const auto ny = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(y_max)));
  const double p = 0.05 + 0.5 * static_cast<double>(rng.below(100)) / 100.0;
  Bipartite out;
  Graph g(nx + ny);
  std::vector<starpack::Vertex> order(nx + ny);
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<starpack::Vertex>(i);
  rng.shuffle(order);
  for (std::size_t i = 0; i < nx; ++i) out.x.push_back(order[i]);
  for (std::size_t i = nx; i < order.size(); ++i) out.y.push_back(order[i]);
  std::sort(out.x.begin(), out.x.end());
  std::sort(out.y.begin(), out.y.end());
  for (auto v : out.y) {
    bool any = false;
    for (auto u : out.x) {
      if (rng.chance(p)) {
        g.add_edge(u, v);
        any = true;
      }
    }
    if (!any) g.add_edge(out.x[rng.below(nx)], v);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const bool same = (i < nx) == (j < nx);
      if (same && rng.chance(0.05)) g.add_edge(order[i], order[j]);
    }
  }
  out.host = std::move(g);
  return out;
}

}  // namespace family
