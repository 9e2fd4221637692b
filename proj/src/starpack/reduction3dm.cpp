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

#include "starpack/reduction3dm.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "starpack/bits.hpp"
#include "starpack/error.hpp"

namespace starpack {

void ThreeDMInstance::validate() const {
  if (k < 1) throw InputError("3DM partite size k must be at least 1, got " + std::to_string(k));
  auto sorted = triples;
  for (const auto& t : sorted) {
    if (t.a < 0 || t.a >= k || t.b < 0 || t.b >= k || t.c < 0 || t.c >= k) {
      throw InputError("triple (" + std::to_string(t.a + 1) + "," + std::to_string(t.b + 1) + "," +
                       std::to_string(t.c + 1) + ") has a coordinate outside 1.." + std::to_string(k));
    }
  }
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InputError("duplicate triple");
}

const char* to_string(GadgetRole role) {
  switch (role) {
    case GadgetRole::v1: return "V1";
    case GadgetRole::v2: return "V2";
    case GadgetRole::v3: return "V3";
    case GadgetRole::x1: return "X1";
    case GadgetRole::x2: return "X2";
    case GadgetRole::y: return "Y";
    case GadgetRole::w: return "W";
  }
  return "?";
}

std::size_t GadgetGraph::count(GadgetRole role) const {
  return static_cast<std::size_t>(std::count(roles.begin(), roles.end(), role));
}

GadgetGraph reduce_3dm(const ThreeDMInstance& inst, int r) {
  inst.validate();
  if (r < 3) throw InputError("the 3DM reduction requires r >= 3, got " + std::to_string(r));
  const int k = inst.k;
  const int m = static_cast<int>(inst.m());
  if (m < k) throw InputError("the 3DM reduction requires m >= k (m=" + std::to_string(m) + ", k=" + std::to_string(k) + ")");

  const int x1_base = 3 * k;
  const int x2_base = x1_base + m;
  const int y_base = x2_base + (m - k);
  const int w_base = y_base + (m - k) * (r - 1);
  const int n = w_base + k * (r - 3);

  GadgetGraph out;
  out.roles.resize(static_cast<std::size_t>(n));
  out.triple_of.assign(static_cast<std::size_t>(n), -1);
  auto fill = [&](int from, int to, GadgetRole role) {
    for (int v = from; v < to; ++v) out.roles[static_cast<std::size_t>(v)] = role;
  };
  fill(0, k, GadgetRole::v1);
  fill(k, 2 * k, GadgetRole::v2);
  fill(2 * k, 3 * k, GadgetRole::v3);
  fill(x1_base, x2_base, GadgetRole::x1);
  fill(x2_base, y_base, GadgetRole::x2);
  fill(y_base, w_base, GadgetRole::y);
  fill(w_base, n, GadgetRole::w);

  std::vector<Edge> edges;
  for (int u = x1_base; u < y_base; ++u) {
    out.clique.push_back(u);
    for (int v = u + 1; v < y_base; ++v) edges.emplace_back(u, v);
  }
  for (int t = 0; t < m; ++t) {
    const Vertex x = x1_base + t;
    const Triple& tr = inst.triples[static_cast<std::size_t>(t)];
    out.triple_of[static_cast<std::size_t>(x)] = t;
    edges.emplace_back(tr.a, x);
    edges.emplace_back(k + tr.b, x);
    edges.emplace_back(2 * k + tr.c, x);
    for (int w = w_base; w < n; ++w) edges.emplace_back(x, w);
  }
  for (int i = 0; i < m - k; ++i) {
    for (int j = 0; j < r - 1; ++j) edges.emplace_back(x2_base + i, y_base + i * (r - 1) + j);
  }
  out.graph = Graph(static_cast<std::size_t>(n), edges);
  return out;
}

namespace {

bool match_from(const ThreeDMInstance& inst, int a, std::vector<char>& used_b, std::vector<char>& used_c) {
  if (a == inst.k) return true;
  for (const auto& t : inst.triples) {
    if (t.a != a || used_b[static_cast<std::size_t>(t.b)] || used_c[static_cast<std::size_t>(t.c)]) continue;
    used_b[static_cast<std::size_t>(t.b)] = used_c[static_cast<std::size_t>(t.c)] = 1;
    if (match_from(inst, a + 1, used_b, used_c)) return true;
    used_b[static_cast<std::size_t>(t.b)] = used_c[static_cast<std::size_t>(t.c)] = 0;
  }
  return false;
}

class StarPartitionSearch {
 public:
  StarPartitionSearch(const Graph& g, int r) : r_(r), adj_(bits::adjacency_masks(g)) {}

  bool cover(bits::Mask open) {
    if (open == 0) return true;
    if (failed_.contains(open)) return false;

    // Branch on the open vertex with the fewest open neighbors; fail early
    // when some open vertex can no longer be placed in any star.
    int pick = -1;
    int pick_degree = 65;
    for (bits::Mask m = open; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      const int deg = std::popcount(adj_[static_cast<std::size_t>(v)] & open);
      if (deg < r_ && !has_open_hub(v, open)) {
        failed_.insert(open);
        return false;
      }
      if (deg < pick_degree) {
        pick = v;
        pick_degree = deg;
      }
    }

    const bits::Mask around = adj_[static_cast<std::size_t>(pick)] & open;
    auto try_star = [&](bits::Mask star) { return cover(open & ~star); };
    if (pick_degree >= r_ && bits::for_each_combination(around, r_, bits::bit(pick), try_star)) return true;
    for (bits::Mask m = around; m != 0; m &= m - 1) {
      const int hub = std::countr_zero(m);
      const bits::Mask pool = adj_[static_cast<std::size_t>(hub)] & open & ~bits::bit(pick);
      if (std::popcount(pool) + 1 < r_) continue;
      if (bits::for_each_combination(pool, r_ - 1, bits::bit(hub) | bits::bit(pick), try_star)) return true;
    }
    failed_.insert(open);
    return false;
  }

 private:
  bool has_open_hub(int v, bits::Mask open) const {
    for (bits::Mask m = adj_[static_cast<std::size_t>(v)] & open; m != 0; m &= m - 1) {
      if (std::popcount(adj_[static_cast<std::size_t>(std::countr_zero(m))] & open) >= r_) return true;
    }
    return false;
  }

  int r_;
  std::vector<bits::Mask> adj_;
  std::unordered_set<bits::Mask> failed_;
};

}  // namespace

bool has_perfect_matching_3dm(const ThreeDMInstance& inst) {
  inst.validate();
  if (inst.m() < static_cast<std::size_t>(inst.k)) return false;
  std::vector<char> used_b(static_cast<std::size_t>(inst.k), 0), used_c(static_cast<std::size_t>(inst.k), 0);
  return match_from(inst, 0, used_b, used_c);
}

bool has_perfect_star_partition(const Graph& g, int r) {
  if (r < 1) throw InputError("star arity r must be at least 1");
  const std::size_t n = g.vertex_count();
  if (n % (static_cast<std::size_t>(r) + 1) != 0) return false;
  if (n == 0) return true;
  if (n > 64) throw LimitError("perfect star partition search supports at most 64 vertices, got " + std::to_string(n));
  return StarPartitionSearch(g, r).cover(bits::all(static_cast<int>(n)));
}

}  // namespace starpack
