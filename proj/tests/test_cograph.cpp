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

#include "cotree.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "starpack/cograph.hpp"
#include "starpack/error.hpp"
#include "starpack/generators.hpp"

using namespace starpack;

TEST_CASE("cotree enumeration produces the known counts") {
  const std::vector<std::size_t> known{1, 2, 4, 10, 24, 66, 180, 522, 1532};
  cotree::Enumerator e(known.size());
  for (std::size_t n = 1; n <= known.size(); ++n) {
    CHECK(e.count(n) == known[n - 1]);
    for (const Graph& g : e.all(n)) CHECK(g.vertex_count() == n);
  }
}

TEST_CASE("cograph recognition agrees with the P4 definition") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Graph g = random_gnp(1 + seed % 11, 0.2 + 0.05 * static_cast<double>(seed % 12), seed);
    CHECK(is_cograph(g) == oracle::is_cograph(g));
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) CHECK(is_cograph(random_cograph(1 + seed % 60, seed)));
  CHECK(is_cograph(Graph()));
}

TEST_CASE("co-components and the co-component split") {
  Graph k33 = join(Graph(3), Graph(3));
  auto co = co_components(k33);
  REQUIRE(co.size() == 2);
  CHECK(co[0] == VertexSet{0, 1, 2});
  auto split = co_component_split(k33);
  CHECK(split.x_side.size() == 3);
  CHECK(split.y_side.size() == 3);
  CHECK_THROWS_AS(co_component_split(Graph(3)), ContractError);

  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Graph g = random_cograph(2 + seed % 40, seed, 0.7);
    CHECK(co_components(g) == components(complement(g)));
    if (components(g).size() != 1) continue;
    auto s = co_component_split(g);
    CHECK(s.x_side.size() + s.y_side.size() == g.vertex_count());
    CHECK(s.x_side.size() >= 1);
    CHECK(s.y_side.size() >= 1);
    for (Vertex x : s.x_side) {
      for (Vertex y : s.y_side) CHECK(g.adjacent(x, y));
    }
  }
}

TEST_CASE("Case 2 arithmetic identities") {
  for (std::int64_t r = 2; r <= 6; ++r) {
    for (std::int64_t x = 1; x <= 60; ++x) {
      for (std::int64_t y = 1; y <= 60; ++y) {
        if (x > r * y || y > r * x) {
          CHECK_THROWS_AS(Case2Arithmetic::compute(x, y, r), InputError);
          continue;
        }
        auto a = Case2Arithmetic::compute(x, y, r);
        CHECK(a.denom == r * r - 1);
        CHECK((r * a.eps_a_num + a.eps_b_num) % a.denom == 0);
        CHECK(a.a_floor * r + a.b_floor + a.slack_y == y);
        CHECK(a.b_floor * r + a.a_floor + a.slack_x == x);
        CHECK(a.eps_a_num >= 0);
        CHECK(a.eps_a_num < a.denom);
        // a and b solve x = a + r b, y = r a + b.
        CHECK(a.a() + static_cast<double>(r) * a.b() == doctest::Approx(static_cast<double>(x)));
      }
    }
  }
  // x = y = 4, r = 3: a = b = 1 exactly.
  auto even = Case2Arithmetic::compute(4, 4, 3);
  CHECK(even.a_floor == 1);
  CHECK(even.b_floor == 1);
  CHECK(even.slack_x == 0);
}

TEST_CASE("maximum closed neighborhood matches brute force") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Graph g = random_cograph(1 + seed % 11, seed, 0.3 + 0.04 * static_cast<double>(seed % 10));
    for (std::size_t s = 1; s <= std::min<std::size_t>(4, g.vertex_count()); ++s) {
      auto c = max_closed_neighborhood(g, s, true);
      CHECK(c.set.size() == s);
      CHECK(c.value == closed_neighborhood_size(g, c.set));
      CHECK(c.value == oracle::max_closed_neighborhood(g, static_cast<int>(s)));
    }
  }
  Graph c4(4);
  c4.add_edge(0, 1);
  c4.add_edge(1, 2);
  c4.add_edge(2, 3);
  c4.add_edge(3, 0);
  CHECK_NOTHROW(max_closed_neighborhood(c4, 1, true));  // C4 = K_{2,2} is a cograph
  Graph p4(4);
  p4.add_edge(0, 1);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  CHECK_THROWS_AS(max_closed_neighborhood(p4, 1, true), ContractError);
}

TEST_CASE("cograph solver examples") {
  auto k44 = solve_cograph(join(Graph(4), Graph(4)), 3);
  CHECK(k44.count == 2);
  CHECK(validate_packing(join(Graph(4), Graph(4)), k44.witness, 3));
  CHECK(solve_cograph(Graph(7), 3).count == 0);
  CHECK(solve_cograph(Graph(), 4).count == 0);
  CHECK_THROWS_AS(solve_cograph(Graph(3), 2), InputError);
  Graph p4(4);
  p4.add_edge(0, 1);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  CHECK_THROWS_AS(solve_cograph(p4, 3, CographOptions{true, {}}), ContractError);
}

TEST_CASE("cograph solver is exact on every cograph up to 9 vertices") {
  cotree::Enumerator e(9);
  CographStats total;
  for (std::size_t n = 1; n <= 9; ++n) {
    for (const Graph& g : e.all(n)) {
      for (int r = 3; r <= 4; ++r) {
        auto sol = solve_cograph(g, r);
        REQUIRE(sol.count == oracle::max_packing(g, r));
        CHECK(validate_packing(g, sol.witness, r));
        total.case1 += sol.stats.case1;
        total.case2 += sol.stats.case2;
      }
    }
  }
  CHECK(total.case1 > 0);
  CHECK(total.case2 > 0);
}

TEST_CASE("cograph solver is exact on random cographs") {
  CographStats total;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Graph g = random_cograph(8 + seed % 7, seed, 0.3 + 0.05 * static_cast<double>(seed % 9));
    const int r = 3 + static_cast<int>(seed % 2);
    int entries = 0;
    CographOptions options;
    options.on_case2 = [&](const Case2Arithmetic& a) {
      ++entries;
      CHECK((a.r * a.eps_a_num + a.eps_b_num) % a.denom == 0);
    };
    auto sol = solve_cograph(g, r, options);
    CHECK(static_cast<std::size_t>(entries) == sol.stats.case2);
    REQUIRE(sol.count == optimal_packing(g, r).count);
    CHECK(validate_packing(g, sol.witness, r));
    total.case2_plus_degree += sol.stats.case2_plus_degree;
    total.case2_plus_neighborhood += sol.stats.case2_plus_neighborhood;
    total.case2_base_optimal += sol.stats.case2_base_optimal;
  }
  CHECK(total.case2_base_optimal > 0);
  CHECK(total.case2_plus_degree + total.case2_plus_neighborhood > 0);
}
