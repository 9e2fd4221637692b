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

#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "starpack/error.hpp"
#include "starpack/generators.hpp"
#include "starpack/reduction3dm.hpp"

using namespace starpack;

TEST_CASE("3DM instance validation") {
  CHECK_THROWS_AS((ThreeDMInstance{0, {}}.validate()), InputError);
  CHECK_THROWS_AS((ThreeDMInstance{2, {{0, 0, 2}}}.validate()), InputError);
  CHECK_THROWS_AS((ThreeDMInstance{2, {{0, 0, 1}, {0, 0, 1}}}.validate()), InputError);
  CHECK_NOTHROW((ThreeDMInstance{2, {{0, 0, 1}, {1, 1, 0}}}.validate()));
}

TEST_CASE("gadget layout") {
  ThreeDMInstance inst{2, {{0, 0, 0}, {1, 1, 1}, {0, 1, 0}}};
  for (int r = 3; r <= 5; ++r) {
    auto gadget = reduce_3dm(inst, r);
    const std::size_t m = 3, k = 2;
    CHECK(gadget.graph.vertex_count() == m * static_cast<std::size_t>(r + 1));
    CHECK(gadget.count(GadgetRole::v1) == k);
    CHECK(gadget.count(GadgetRole::v2) == k);
    CHECK(gadget.count(GadgetRole::v3) == k);
    CHECK(gadget.count(GadgetRole::x1) == m);
    CHECK(gadget.count(GadgetRole::x2) == m - k);
    CHECK(gadget.count(GadgetRole::y) == (m - k) * static_cast<std::size_t>(r - 1));
    CHECK(gadget.count(GadgetRole::w) == k * static_cast<std::size_t>(r - 3));
    CHECK(is_split_partition(gadget.graph, gadget.clique));
    CHECK(is_split(gadget.graph));
    CHECK_FALSE(has_induced_path(gadget.graph, 5));
    // X1 vertex of triple t sees exactly its three V vertices and all of W.
    for (Vertex v = 0; v < static_cast<Vertex>(gadget.graph.vertex_count()); ++v) {
      if (gadget.roles[static_cast<std::size_t>(v)] != GadgetRole::x1) continue;
      CHECK(gadget.triple_of[static_cast<std::size_t>(v)] >= 0);
      std::size_t v_neighbors = 0, w_neighbors = 0;
      for (Vertex w : gadget.graph.neighbors(v)) {
        auto role = gadget.roles[static_cast<std::size_t>(w)];
        if (role == GadgetRole::v1 || role == GadgetRole::v2 || role == GadgetRole::v3) ++v_neighbors;
        if (role == GadgetRole::w) ++w_neighbors;
      }
      CHECK(v_neighbors == 3);
      CHECK(w_neighbors == gadget.count(GadgetRole::w));
    }
  }
  CHECK_THROWS_AS(reduce_3dm(inst, 2), InputError);
  CHECK_THROWS_AS(reduce_3dm(ThreeDMInstance{3, {{0, 0, 0}}}, 3), InputError);
  CHECK(std::string(to_string(GadgetRole::x2)) == "X2");
}

TEST_CASE("perfect matching search agrees with brute force") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int k = 1 + static_cast<int>(seed % 3);
    const std::size_t m = std::min<std::size_t>(static_cast<std::size_t>(k) + seed % 5, static_cast<std::size_t>(k * k * k));
    auto inst = random_3dm(k, m, seed, seed % 3 == 0);
    CHECK(has_perfect_matching_3dm(inst) == oracle::perfect_3dm(inst));
    if (seed % 3 == 0) CHECK(has_perfect_matching_3dm(inst));
  }
}

TEST_CASE("perfect star partition agrees with brute force") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Graph g = random_gnp(1 + seed % 13, 0.3, seed);
    const int r = 1 + static_cast<int>(seed % 3);
    CHECK(has_perfect_star_partition(g, r) == oracle::perfect_star_partition(g, r));
  }
  CHECK(has_perfect_star_partition(Graph(), 3));
  CHECK(has_perfect_star_partition(disjoint_stars(3, 3, 0.0, 5), 3));
  CHECK_FALSE(has_perfect_star_partition(disjoint_stars(3, 3, 0.0, 5), 2));
  CHECK_THROWS_AS(has_perfect_star_partition(Graph(66), 2), LimitError);
}

TEST_CASE("reduction preserves the answer") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int k = 1 + static_cast<int>(seed % 2);
    const std::size_t m = std::min<std::size_t>(static_cast<std::size_t>(k) + seed % 4, static_cast<std::size_t>(k * k * k));
    auto inst = random_3dm(k, m, seed, seed % 2 == 0);
    const int r = 3 + static_cast<int>(seed % 2);
    auto gadget = reduce_3dm(inst, r);
    CHECK(has_perfect_matching_3dm(inst) == has_perfect_star_partition(gadget.graph, r));
  }
}
