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

#include "doctest.h"
#include "oracles.hpp"
#include "starpack/error.hpp"
#include "starpack/generators.hpp"
#include "starpack/packing.hpp"

using namespace starpack;

namespace {

Graph complete_bipartite(std::size_t a, std::size_t b) {
  return join(Graph(a), Graph(b));
}

// No star of g can be added to p without overlapping it.
bool is_maximal(const Graph& g, const StarPacking& p, int r) {
  std::vector<char> used(g.vertex_count(), 0);
  for (Vertex v : p.vertices()) used[static_cast<std::size_t>(v)] = 1;
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    int free = 0;
    for (Vertex w : g.neighbors(v)) free += used[static_cast<std::size_t>(w)] ? 0 : 1;
    if (free >= r) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("validate_packing checks every star condition") {
  Graph g = complete_bipartite(2, 6);
  StarPacking ok{{Star{0, {2, 3, 4}}, Star{1, {5, 6, 7}}}};
  CHECK(validate_packing(g, ok, 3));
  CHECK_FALSE(validate_packing(g, ok, 2));
  CHECK_FALSE(validate_packing(g, ok, 0));

  StarPacking overlap{{Star{0, {2, 3, 4}}, Star{1, {4, 6, 7}}}};
  CHECK_FALSE(validate_packing(g, overlap, 3));
  StarPacking nonadjacent{{Star{2, {3, 4, 5}}}};
  CHECK_FALSE(validate_packing(g, nonadjacent, 3));
  StarPacking repeated{{Star{0, {2, 2, 3}}}};
  CHECK_FALSE(validate_packing(g, repeated, 3));
  StarPacking center_leaf{{Star{0, {0, 2, 3}}}};
  CHECK_FALSE(validate_packing(g, center_leaf, 3));
  StarPacking out_of_range{{Star{0, {2, 3, 99}}}};
  CHECK_FALSE(validate_packing(g, out_of_range, 3));
  CHECK(validate_packing(g, StarPacking{}, 3));
}

TEST_CASE("greedy packing is valid and maximal") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Graph g = random_gnp(1 + seed % 30, 0.05 + 0.01 * static_cast<double>(seed % 40), seed);
    for (int r = 1; r <= 4; ++r) {
      auto p = greedy_maximal_packing(g, r);
      CHECK(validate_packing(g, p, r));
      CHECK(is_maximal(g, p, r));
    }
  }
}

TEST_CASE("optimal packing examples") {
  CHECK(optimal_packing(complete_bipartite(4, 4), 3).count == 2);
  CHECK(optimal_packing(Graph(10), 2).count == 0);
  CHECK(optimal_packing(Graph(), 2).count == 0);
  CHECK(optimal_packing(disjoint_stars(4, 3, 0.0, 1), 3).count == 4);
  // K_{1,5}: one center, so one star whatever the leaf count.
  CHECK(optimal_packing(complete_bipartite(1, 5), 2).count == 1);
  CHECK_THROWS_AS(optimal_packing(Graph(65), 2), LimitError);
}

TEST_CASE("optimal packing matches exhaustive search") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Graph g = random_gnp(1 + seed % 12, 0.1 + 0.05 * static_cast<double>(seed % 12), seed);
    for (int r = 1; r <= 3; ++r) {
      auto opt = optimal_packing(g, r);
      REQUIRE(opt.count == oracle::max_packing(g, r));
      CHECK(static_cast<int>(opt.witness.size()) == opt.count);
      CHECK(validate_packing(g, opt.witness, r));
    }
  }
}

TEST_CASE("optimal packing is at least greedy") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = random_gnp(16 + seed % 6, 0.2, seed);
    auto opt = optimal_packing(g, 2);
    CHECK(opt.count >= static_cast<int>(greedy_maximal_packing(g, 2).size()));
    CHECK(validate_packing(g, opt.witness, 2));
  }
}

TEST_CASE("star_exists_intersecting follows the degree characterization") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Graph g = random_gnp(2 + seed % 9, 0.3, seed);
    const int r = 1 + static_cast<int>(seed % 3);
    auto stars = oracle::all_stars(g, r);
    for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
      for (Vertex w = v; w < static_cast<Vertex>(g.vertex_count()); ++w) {
        oracle::Mask l = oracle::bit(v) | oracle::bit(w);
        bool expect = std::any_of(stars.begin(), stars.end(), [&](oracle::Mask s) { return (s & l) != 0; });
        std::vector<Vertex> set = v == w ? std::vector<Vertex>{v} : std::vector<Vertex>{v, w};
        CHECK(star_exists_intersecting(g, set, r) == expect);
      }
    }
  }
}

TEST_CASE("lift_packing maps back to host ids") {
  StarPacking p{{Star{0, {1, 2}}}};
  const std::vector<Vertex> original{4, 7, 9};
  auto lifted = lift_packing(p, original);
  REQUIRE(lifted.size() == 1);
  CHECK(lifted.stars[0].center == 4);
  CHECK(lifted.stars[0].leaves == std::vector<Vertex>{7, 9});
  CHECK(lifted.vertices() == VertexSet{4, 7, 9});
}
