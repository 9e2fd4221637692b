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
#include "families.hpp"
#include "oracles.hpp"
#include "starpack/error.hpp"
#include "starpack/generators.hpp"
#include "starpack/kernel.hpp"

using namespace starpack;

namespace {

bool answer(const Graph& g, int k, int r) { return k <= 0 || oracle::max_packing(g, r) >= k; }

bool kernel_answer(const KernelResult& res) { return answer(res.out.g, res.out.k, res.out.r); }

}  // namespace

TEST_CASE("instance validation") {
  CHECK_THROWS_AS((PackingInstance{Graph(3), -1, 2, 3}.validate()), InputError);
  CHECK_THROWS_AS((PackingInstance{Graph(3), 1, 1, 3}.validate()), InputError);
  CHECK_THROWS_AS((PackingInstance{Graph(3), 1, 2, 2}.validate()), InputError);
  CHECK_NOTHROW((PackingInstance{Graph(3), 0, 2, 3}.validate()));
}

TEST_CASE("bound arithmetic") {
  CHECK(saturating_pow(3, 5) == 243);
  CHECK(saturating_pow(2, 0) == 1);
  CHECK(saturating_pow(10, 40) == INT64_MAX);
  CHECK(kernel_vertex_bound(3, 3, 4) == 2 * 4 * (243 + 1));
  CHECK(kernel_vertex_bound(2, 3, 5) == 1 * 4 * (729 + 1));
  CHECK(kernel_vertex_bound(1, 3, 4) == 0);
  CHECK(kernel_vertex_bound(1000, 50, 60) == INT64_MAX);
}

TEST_CASE("canonical yes instance has no induced P3") {
  Graph g = canonical_yes_graph(3, 2);
  CHECK(g.vertex_count() == 9);
  CHECK_FALSE(has_induced_path(g, 3));
  CHECK(oracle::max_packing(g, 2) == 3);
  CHECK(canonical_yes_graph(0, 3).vertex_count() == 0);
}

TEST_CASE("small vertices are exactly those in no star") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Graph g = random_gnp(1 + seed % 14, 0.15, seed);
    const int r = 2 + static_cast<int>(seed % 2);
    auto stars = oracle::all_stars(g, r);
    oracle::Mask covered = 0;
    for (auto s : stars) covered |= s;
    VertexSet expect;
    for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
      if (!(covered & oracle::bit(v))) expect.push_back(v);
    }
    CHECK(small_vertices(g, r) == expect);
  }
}

TEST_CASE("simplify reaches a fixpoint and keeps the optimum") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto inst = family::small_mixed(seed, 13);
    const int r = 2 + static_cast<int>(seed % 2);
    VertexSet kept;
    auto out = simplify(PackingInstance{inst.g, 2, r, inst.d}, &kept);
    CHECK(small_vertices(out.g, r).empty());
    CHECK(kept.size() == out.g.vertex_count());
    CHECK(out.k == 2);
    CHECK(oracle::max_packing(out.g, r) == oracle::max_packing(inst.g, r));
    // The survivors induce the output graph.
    CHECK(induced_subgraph(inst.g, kept).graph == out.g);
  }
}

TEST_CASE("constellation checks") {
  // K_{1,3} plus a pendant path: C = {center}, L = leaves.
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  g.add_edge(4, 5);
  auto ok = is_constellation(g, {0}, {1, 2, 3}, 3);
  CHECK(ok.holds);
  CHECK(ok.witness.size() == 1);
  CHECK(ok.refutation.empty());

  // After deleting C = {}, L = {1} still meets the star at 0.
  auto bad = is_constellation(g, {}, {1}, 3);
  CHECK_FALSE(bad.holds);
  CHECK_FALSE(bad.refutation.empty());

  // Too few leaves for a 3-star.
  CHECK_FALSE(is_constellation(g, {0}, {1, 2}, 3).holds);
  CHECK_THROWS_AS(is_constellation(g, {0}, {0, 1}, 3), InputError);

  auto next = apply_constellation(PackingInstance{g, 3, 3, 4}, Constellation{{0}, {1, 2, 3}, {}});
  CHECK(next.k == 2);
  CHECK(next.g.vertex_count() == 2);
  auto clamped = apply_constellation(PackingInstance{g, 0, 3, 4}, Constellation{{0}, {1, 2, 3}, {}});
  CHECK(clamped.k == 0);
  CHECK_THROWS_AS(apply_constellation(PackingInstance{g, 3, 3, 4}, Constellation{{}, {1}, {}}), ContractError);
}

TEST_CASE("kernel state bookkeeping") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  KernelState st(4, {0, 1});
  CHECK(st.count(KernelState::Part::big) == 2);
  CHECK(st.count(KernelState::Part::u_d) == 2);
  st.move(0, KernelState::Part::small);
  CHECK(st.members(KernelState::Part::small) == VertexSet{0});
  CHECK_NOTHROW(st.check_properties(g, 2, 3));
  st.move(2, KernelState::Part::b_d);
  // U(D) vertex 3 now touches B(D) vertex 2.
  CHECK_THROWS_AS(st.check_properties(g, 2, 3), ContractError);
}

TEST_CASE("trivial outcomes") {
  Graph g = disjoint_stars(3, 3, 0.0, 1);
  auto zero = kernelize(PackingInstance{g, 0, 3, 4});
  CHECK(zero.outcome == KernelOutcome::trivial_yes);
  CHECK(zero.out.k == 0);

  auto one_yes = kernelize(PackingInstance{g, 1, 3, 4});
  CHECK(one_yes.outcome == KernelOutcome::trivial_yes);
  CHECK(kernel_answer(one_yes));

  auto one_no = kernelize(PackingInstance{disjoint_stars(3, 2, 0.0, 1), 1, 3, 4});
  CHECK(one_no.outcome == KernelOutcome::trivial_no);
  CHECK_FALSE(kernel_answer(one_no));

  auto greedy = kernelize(PackingInstance{g, 3, 3, 4});
  CHECK(greedy.outcome == KernelOutcome::trivial_yes);
  CHECK(greedy.out.g == canonical_yes_graph(3, 3));
  CHECK(std::string(to_string(KernelOutcome::trivial_yes)) == "trivial-yes");
  CHECK(std::string(to_string(StepType::move_small_degree)) == "move-small-degree");
}

TEST_CASE("verify_class rejects graphs outside the class") {
  Graph p5(5);
  for (Vertex v = 0; v < 4; ++v) p5.add_edge(v, v + 1);
  KernelOptions options;
  options.verify_class = true;
  CHECK_THROWS_AS(kernelize(PackingInstance{p5, 2, 2, 5}, options), ContractError);
  CHECK_NOTHROW(kernelize(PackingInstance{p5, 2, 2, 6}, options));
}

TEST_CASE("kernelization preserves the answer on small graphs") {
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    auto inst = family::small_mixed(seed, 14);
    const int r = 2 + static_cast<int>(seed % 2);
    for (int k = 0; k <= 5; ++k) {
      int seen = 0;
      KernelOptions options;
      options.on_constellation = [&](const PackingInstance& before, const Constellation& con) {
        ++seen;
        auto after = apply_constellation(before, con);
        CHECK(answer(before.g, before.k, r) == answer(after.g, after.k, r));
      };
      auto res = kernelize(PackingInstance{inst.g, k, r, inst.d}, options);
      CAPTURE(seed);
      CAPTURE(k);
      REQUIRE(answer(inst.g, k, r) == kernel_answer(res));
      if (k >= 2 && res.out.k >= 2) {
        CHECK(static_cast<std::int64_t>(res.out.g.vertex_count()) <= kernel_vertex_bound(k, r, inst.d));
      }
      CHECK(res.out.k <= k);
      CHECK_FALSE(res.trace.empty());
      CHECK(res.trace.back().step == StepType::terminate);
      if (res.outcome == KernelOutcome::kernel) {
        CHECK(res.kept.size() == res.out.g.vertex_count());
        CHECK(induced_subgraph(inst.g, res.kept).graph == res.out.g);
      }
    }
  }
}

TEST_CASE("kernels of hub cographs respect the bound and stay in the class") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = family::hub_cograph(seed, 400);
    for (int k = 2; k <= 8; k += 3) {
      auto res = kernelize(PackingInstance{g, k, 3, 4});
      CHECK(static_cast<std::int64_t>(res.out.g.vertex_count()) <= kernel_vertex_bound(k, 3, 4));
      if (res.out.g.vertex_count() <= 60) CHECK_FALSE(has_induced_path(res.out.g, 4));
    }
  }
}
