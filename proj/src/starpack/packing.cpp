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

#include "starpack/packing.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>

#include "starpack/bits.hpp"
#include "starpack/error.hpp"

namespace starpack {

VertexSet StarPacking::vertices() const {
  std::vector<Vertex> out;
  for (const auto& s : stars) {
    out.push_back(s.center);
    out.insert(out.end(), s.leaves.begin(), s.leaves.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool validate_packing(const Graph& g, const StarPacking& p, int r) {
  if (r < 1) return false;
  std::vector<char> used(g.vertex_count(), 0);
  auto claim = [&](Vertex v) {
    if (!g.contains(v) || used[static_cast<std::size_t>(v)]) return false;
    used[static_cast<std::size_t>(v)] = 1;
    return true;
  };
  for (const auto& s : p.stars) {
    if (s.leaves.size() != static_cast<std::size_t>(r)) return false;
    if (!claim(s.center)) return false;
    for (Vertex leaf : s.leaves) {
      if (!claim(leaf) || !g.adjacent(s.center, leaf)) return false;
    }
  }
  return true;
}

StarPacking greedy_maximal_packing(const Graph& g, int r) {
  if (r < 1) throw InputError("star arity r must be at least 1");
  const std::size_t n = g.vertex_count();
  std::vector<char> used(n, 0);
  StarPacking out;
  for (std::size_t v = 0; v < n; ++v) {
    if (used[v]) continue;
    std::vector<Vertex> free;
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
      if (!used[static_cast<std::size_t>(w)]) {
        free.push_back(w);
        if (free.size() == static_cast<std::size_t>(r)) break;
      }
    }
    if (free.size() < static_cast<std::size_t>(r)) continue;
    used[v] = 1;
    for (Vertex w : free) used[static_cast<std::size_t>(w)] = 1;
    out.stars.push_back(Star{static_cast<Vertex>(v), std::move(free)});
  }
  return out;
}

namespace {

using bits::Mask;
using bits::bit;
using bits::for_each_combination;

class PackingOracle {
 public:
  PackingOracle(const Graph& g, int r)
      : n_(static_cast<int>(g.vertex_count())), r_(r), adj_(bits::adjacency_masks(g)) {
    if (n_ <= kTableLimit) table_.assign(std::size_t{1} << n_, -1);
  }

  OptimalPacking solve() {
    OptimalPacking out;
    Mask remaining = bits::all(n_);
    out.count = value(remaining);
    // Walk the memo table along an optimal branch to recover the stars.
    while (true) {
      auto [alive, high] = trim(remaining);
      if (alive == 0 || value(alive) == 0) break;
      const int target = value(alive);
      const int v = std::countr_zero(alive);
      bool taken = false;
      for_each_star(alive, high, v, [&](int center, Mask star) {
        if (1 + value(alive & ~star) != target) return false;
        Star s{center, {}};
        for (Mask m = star & ~bit(center); m != 0; m &= m - 1) s.leaves.push_back(std::countr_zero(m));
        out.witness.stars.push_back(std::move(s));
        remaining = alive & ~star;
        taken = true;
        return true;
      });
      if (!taken) remaining = alive & ~bit(v);
    }
    return out;
  }

 private:
  static constexpr int kTableLimit = 22;

  // Drops vertices that lie in no r-star of G[R]. Returns (trimmed R, set of
  // vertices with degree >= r). One pass suffices: a dropped vertex has no
  // neighbor of degree >= r, so removing it never lowers such a degree.
  std::pair<Mask, Mask> trim(Mask set) const {
    Mask high = 0;
    for (Mask m = set; m != 0; m &= m - 1) {
      int v = std::countr_zero(m);
      if (std::popcount(adj_[static_cast<std::size_t>(v)] & set) >= r_) high |= bit(v);
    }
    Mask alive = high;
    for (Mask m = high; m != 0; m &= m - 1) alive |= adj_[static_cast<std::size_t>(std::countr_zero(m))] & set;
    return {alive, high};
  }

  template <class F>
  bool for_each_star(Mask alive, Mask high, int v, F&& f) const {
    if (high & bit(v)) {
      Mask pool = adj_[static_cast<std::size_t>(v)] & alive;
      if (for_each_combination(pool, r_, bit(v), [&](Mask s) { return f(v, s); })) return true;
    }
    for (Mask m = adj_[static_cast<std::size_t>(v)] & high & alive; m != 0; m &= m - 1) {
      int u = std::countr_zero(m);
      Mask pool = adj_[static_cast<std::size_t>(u)] & alive & ~bit(v);
      if (for_each_combination(pool, r_ - 1, bit(u) | bit(v), [&](Mask s) { return f(u, s); })) return true;
    }
    return false;
  }

  int lookup(Mask set) const {
    if (!table_.empty()) return table_[set];
    auto it = memo_.find(set);
    return it == memo_.end() ? -1 : it->second;
  }

  void store(Mask set, int value) {
    if (!table_.empty()) {
      table_[set] = static_cast<std::int8_t>(value);
    } else {
      memo_.emplace(set, value);
    }
  }

  int value(Mask set) {
    auto [alive, high] = trim(set);
    if (alive == 0) return 0;
    if (int cached = lookup(alive); cached >= 0) return cached;
    const int bound = std::min(std::popcount(alive) / (r_ + 1), std::popcount(high));
    const int v = std::countr_zero(alive);
    int best = 0;
    for_each_star(alive, high, v, [&](int, Mask star) {
      best = std::max(best, 1 + value(alive & ~star));
      return best == bound;
    });
    if (best < bound) best = std::max(best, value(alive & ~bit(v)));
    store(alive, best);
    return best;
  }

  int n_;
  int r_;
  std::vector<Mask> adj_;
  std::vector<std::int8_t> table_;
  std::unordered_map<Mask, int> memo_;
};

}  // namespace

OptimalPacking optimal_packing(const Graph& g, int r) {
  if (r < 1) throw InputError("star arity r must be at least 1");
  if (g.vertex_count() > 64) {
    throw LimitError("exact packing oracle supports at most 64 vertices, got " +
                     std::to_string(g.vertex_count()));
  }
  return PackingOracle(g, r).solve();
}

bool star_exists_intersecting(const Graph& g, std::span<const Vertex> l, int r) {
  if (r < 1) throw InputError("star arity r must be at least 1");
  const auto need = static_cast<std::size_t>(r);
  for (Vertex v : l) {
    if (!g.contains(v)) throw InputError("vertex " + std::to_string(v) + " out of range");
    if (g.degree(v) >= need) return true;
    for (Vertex w : g.neighbors(v)) {
      if (g.degree(w) >= need) return true;
    }
  }
  return false;
}

StarPacking lift_packing(const StarPacking& p, std::span<const Vertex> original) {
  StarPacking out;
  out.stars.reserve(p.size());
  for (const auto& s : p.stars) {
    Star lifted{original[static_cast<std::size_t>(s.center)], {}};
    for (Vertex leaf : s.leaves) lifted.leaves.push_back(original[static_cast<std::size_t>(leaf)]);
    out.stars.push_back(std::move(lifted));
  }
  return out;
}

}  // namespace starpack
