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

// Brute-force reference implementations. They share only the Graph container
// with the library and are meant for small inputs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "starpack/graph.hpp"
#include "starpack/reduction3dm.hpp"

namespace oracle {

using starpack::Graph;
using starpack::Vertex;
using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask{1} << i; }

// Visits every k-subset of `pool`; stops early when f returns true.
inline bool subsets(const std::vector<int>& pool, int k, const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> pick;
  std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
    if (static_cast<int>(pick.size()) == k) return f(pick);
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (pool.size() - i < static_cast<std::size_t>(k) - pick.size()) break;
      pick.push_back(pool[i]);
      if (rec(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(0);
}

inline std::vector<int> range(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

// Every r-star of g as a vertex mask (center plus r of its neighbors).
inline std::vector<Mask> all_stars(const Graph& g, int r) {
  std::vector<Mask> out;
  for (Vertex c = 0; c < static_cast<Vertex>(g.vertex_count()); ++c) {
    std::vector<int> nb(g.neighbors(c).begin(), g.neighbors(c).end());
    subsets(nb, r, [&](const std::vector<int>& leaves) {
      Mask m = bit(c);
      for (int l : leaves) m |= bit(l);
      out.push_back(m);
      return false;
    });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Maximum number of disjoint stars from `stars` inside `avail`, by deciding
// the lowest available vertex: unused, or covered by one of its stars.
// With `perfect`, returns -1 unless every vertex can be covered.
inline int max_disjoint(const std::vector<Mask>& stars, Mask avail, bool perfect) {
  std::unordered_map<Mask, int> memo;
  std::function<int(Mask)> rec = [&](Mask a) -> int {
    if (a == 0) return 0;
    if (auto it = memo.find(a); it != memo.end()) return it->second;
    const int v = __builtin_ctzll(a);
    int best = perfect ? -1 : rec(a & ~bit(v));
    for (Mask s : stars) {
      if ((s & bit(v)) && (s & a) == s) {
        int sub = rec(a & ~s);
        if (sub >= 0) best = std::max(best, sub + 1);
      }
    }
    memo.emplace(a, best);
    return best;
  };
  return rec(avail);
}

inline Mask full(std::size_t n) { return n == 64 ? ~Mask{0} : bit(static_cast<int>(n)) - 1; }

inline int max_packing(const Graph& g, int r) { return max_disjoint(all_stars(g, r), full(g.vertex_count()), false); }

inline bool perfect_star_partition(const Graph& g, int r) {
  return max_disjoint(all_stars(g, r), full(g.vertex_count()), true) >= 0;
}

// Does the vertex set induce a path (connected, |S|-1 edges, max degree 2)?
inline bool induces_path(const Graph& g, const std::vector<int>& s) {
  if (s.size() == 1) return true;
  std::size_t edges = 0;
  for (int u : s) {
    int deg = 0;
    for (int v : s) deg += g.adjacent(u, v) ? 1 : 0;
    if (deg == 0 || deg > 2) return false;
    edges += static_cast<std::size_t>(deg);
  }
  if (edges / 2 != s.size() - 1) return false;
  // Acyclic with |S|-1 edges and no isolated vertex: check connectivity.
  std::vector<int> seen{s.front()};
  for (std::size_t i = 0; i < seen.size(); ++i) {
    for (int v : s) {
      if (g.adjacent(seen[i], v) && std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
    }
  }
  return seen.size() == s.size();
}

inline bool has_induced_path(const Graph& g, int d) {
  if (d > static_cast<int>(g.vertex_count())) return false;
  return subsets(range(static_cast<int>(g.vertex_count())), d, [&](const std::vector<int>& s) { return induces_path(g, s); });
}

// Vertices on the longest induced path; 0 for the empty graph.
inline int longest_induced_path(const Graph& g) {
  int best = 0;
  while (best < static_cast<int>(g.vertex_count()) && oracle::has_induced_path(g, best + 1)) ++best;
  return best;
}

inline bool is_cograph(const Graph& g) { return !oracle::has_induced_path(g, 4); }

inline bool is_split(const Graph& g) {
  const int n = static_cast<int>(g.vertex_count());
  for (Mask c = 0; c < full(static_cast<std::size_t>(n)) + 1; ++c) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = u + 1; v < n && ok; ++v) {
        const bool cu = (c & bit(u)) != 0, cv = (c & bit(v)) != 0;
        if (cu && cv && !g.adjacent(u, v)) ok = false;
        if (!cu && !cv && g.adjacent(u, v)) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

inline std::size_t max_closed_neighborhood(const Graph& g, int s) {
  std::size_t best = 0;
  subsets(range(static_cast<int>(g.vertex_count())), s, [&](const std::vector<int>& pick) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : pick) {
      in[static_cast<std::size_t>(v)] = 1;
      for (Vertex w : g.neighbors(v)) in[static_cast<std::size_t>(w)] = 1;
    }
    best = std::max<std::size_t>(best, static_cast<std::size_t>(std::count(in.begin(), in.end(), 1)));
    return false;
  });
  return best;
}

// Maximum matching between x and y (host vertices), by trying every way to
// match the first x vertex.
inline int max_bipartite_matching(const Graph& g, const std::vector<Vertex>& x, const std::vector<Vertex>& y) {
  std::vector<char> used(y.size(), 0);
  std::function<int(std::size_t)> rec = [&](std::size_t i) -> int {
    if (i == x.size()) return 0;
    int best = rec(i + 1);
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (!used[j] && g.adjacent(x[i], y[j])) {
        used[j] = 1;
        best = std::max(best, 1 + rec(i + 1));
        used[j] = 0;
      }
    }
    return best;
  };
  return rec(0);
}

// Can every x vertex get r private neighbors in y?
inline bool stars_into(const Graph& g, const std::vector<Vertex>& x, const std::vector<Vertex>& y, int r) {
  std::vector<char> used(y.size(), 0);
  std::function<bool(std::size_t, int, std::size_t)> rec = [&](std::size_t i, int got, std::size_t from) -> bool {
    if (i == x.size()) return true;
    if (got == r) return rec(i + 1, 0, 0);
    for (std::size_t j = from; j < y.size(); ++j) {
      if (!used[j] && g.adjacent(x[i], y[j])) {
        used[j] = 1;
        if (rec(i, got + 1, j + 1)) return true;
        used[j] = 0;
      }
    }
    return false;
  };
  return rec(0, 0, 0);
}

inline bool perfect_3dm(const starpack::ThreeDMInstance& inst) {
  bool found = false;
  subsets(range(static_cast<int>(inst.m())), inst.k, [&](const std::vector<int>& pick) {
    std::vector<char> a(static_cast<std::size_t>(inst.k), 0), b = a, c = a;
    for (int i : pick) {
      const auto& t = inst.triples[static_cast<std::size_t>(i)];
      if (a[static_cast<std::size_t>(t.a)]++ || b[static_cast<std::size_t>(t.b)]++ || c[static_cast<std::size_t>(t.c)]++) return false;
    }
    found = true;
    return true;
  });
  return found;
}

}  // namespace oracle
