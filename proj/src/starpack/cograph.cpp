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

#include "starpack/cograph.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "starpack/error.hpp"

namespace starpack {

namespace {

bool cograph_rec(const Graph& g) {
  if (g.vertex_count() < 4) return true;
  auto parts = components(g);
  if (parts.size() == 1) {
    parts = complement_components(g);
    if (parts.size() == 1) return false;
  }
  for (const auto& part : parts) {
    if (part.size() >= 4 && !cograph_rec(induced_subgraph(g, part).graph)) return false;
  }
  return true;
}

void internal_check(bool ok, const std::string& what) {
  if (!ok) throw ContractError("cograph solver invariant violated: " + what);
}

VertexSet minus(const VertexSet& from, const std::vector<char>& used) {
  VertexSet out;
  for (Vertex v : from) {
    if (!used[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

// Pools of unused vertices on the two sides of a join, consumed in ascending
// order.
class CrossPools {
 public:
  CrossPools(VertexSet p, VertexSet q) : p_(std::move(p)), q_(std::move(q)) {}

  Vertex take_p() { return take(p_, ip_); }
  Vertex take_q() { return take(q_, iq_); }

  // `np` stars centered on the P side with leaves on the Q side, then `nq`
  // the other way round. Every cross pair is an edge, so any choice works.
  void place(std::int64_t np, std::int64_t nq, int r, StarPacking& out) {
    for (std::int64_t i = 0; i < np; ++i) {
      Star s{take_p(), {}};
      for (int j = 0; j < r; ++j) s.leaves.push_back(take_q());
      out.stars.push_back(std::move(s));
    }
    for (std::int64_t i = 0; i < nq; ++i) {
      Star s{take_q(), {}};
      for (int j = 0; j < r; ++j) s.leaves.push_back(take_p());
      out.stars.push_back(std::move(s));
    }
  }

 private:
  static Vertex take(const VertexSet& pool, std::size_t& cursor) {
    internal_check(cursor < pool.size(), "ran out of vertices for cross stars");
    return pool[cursor++];
  }

  VertexSet p_, q_;
  std::size_t ip_ = 0, iq_ = 0;
};

class CographSolver {
 public:
  CographSolver(int r, const CographOptions& options) : r_(r), options_(options) {}

  const CographStats& stats() const { return stats_; }

  StarPacking solve(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n < static_cast<std::size_t>(r_) + 1) return {};
    auto parts = components(g);
    if (parts.size() > 1) {
      StarPacking out;
      for (const auto& part : parts) {
        if (part.size() < static_cast<std::size_t>(r_) + 1) continue;
        InducedSubgraph sub = induced_subgraph(g, part);
        StarPacking inner = lift_packing(solve(sub.graph), sub.original);
        out.stars.insert(out.stars.end(), inner.stars.begin(), inner.stars.end());
      }
      return out;
    }
    CoComponentSplit split = co_component_split(g);
    const auto x = static_cast<std::int64_t>(split.x_side.size());
    const auto y = static_cast<std::int64_t>(split.y_side.size());
    if (x > r_ * y) return case1(g, split.x_side, split.y_side);
    if (y > r_ * x) return case1(g, split.y_side, split.x_side);
    return case2(g, split.x_side, split.y_side);
  }

 private:
  // One side outweighs the other r-fold: pack the big side recursively, then
  // hang one star on every vertex of the small side.
  StarPacking case1(const Graph& g, const VertexSet& big, const VertexSet& small) {
    ++stats_.case1;
    const std::size_t n = g.vertex_count();
    InducedSubgraph sub = induced_subgraph(g, big);
    StarPacking inner = lift_packing(solve(sub.graph), sub.original);
    std::vector<char> used(n, 0);
    for (Vertex v : inner.vertices()) used[static_cast<std::size_t>(v)] = 1;
    VertexSet free = minus(big, used);

    const std::size_t star_size = static_cast<std::size_t>(r_) + 1;
    StarPacking out;
    if (star_size * (inner.size() + small.size()) <= n) {
      out = std::move(inner);
      std::size_t cursor = 0;
      for (Vertex c : small) {
        Star s{c, {}};
        for (int j = 0; j < r_; ++j) s.leaves.push_back(free[cursor++]);
        out.stars.push_back(std::move(s));
      }
      return out;
    }

    // Not enough room: break up inner stars, last first, to feed leaves to
    // the small side, and keep the untouched ones.
    std::vector<Star> intact = std::move(inner.stars);
    std::size_t cursor = 0;
    std::vector<Star> hung;
    for (Vertex c : small) {
      Star s{c, {}};
      while (s.leaves.size() < static_cast<std::size_t>(r_)) {
        if (cursor == free.size()) {
          internal_check(!intact.empty(), "case 1 ran out of leaves");
          Star broken = std::move(intact.back());
          intact.pop_back();
          free.push_back(broken.center);
          free.insert(free.end(), broken.leaves.begin(), broken.leaves.end());
        }
        s.leaves.push_back(free[cursor++]);
      }
      hung.push_back(std::move(s));
    }
    out.stars = std::move(intact);
    out.stars.insert(out.stars.end(), hung.begin(), hung.end());
    internal_check(out.size() == n / star_size, "case 1 fallback is not floor(n/(r+1))");
    return out;
  }

  StarPacking case2(const Graph& g, const VertexSet& xs, const VertexSet& ys) {
    ++stats_.case2;
    const std::size_t n = g.vertex_count();
    const auto arith = Case2Arithmetic::compute(static_cast<std::int64_t>(xs.size()),
                                                static_cast<std::int64_t>(ys.size()), r_);
    if (options_.on_case2) options_.on_case2(arith);
    std::vector<char> in_x(n, 0);
    for (Vertex v : xs) in_x[static_cast<std::size_t>(v)] = 1;

    StarPacking out;
    if (arith.slack_x + arith.slack_y < r_ + 1) {
      ++stats_.case2_base_optimal;
      CrossPools(xs, ys).place(arith.a_floor, arith.b_floor, r_, out);
      return out;
    }

    // Side P plays X, side Q plays Y; np/nq count cross stars centered on P/Q.
    struct Side {
      const VertexSet& p;
      const VertexSet& q;
      bool p_is_x;
      std::int64_t np, nq;
      std::int64_t slack_p, slack_q;
    };
    const Side x_side{xs, ys, true, arith.a_floor, arith.b_floor, arith.slack_x, arith.slack_y};
    const Side y_side{ys, xs, false, arith.b_floor, arith.a_floor, arith.slack_y, arith.slack_x};

    for (const Side& side : {x_side, y_side}) {
      if (auto w = high_inner_degree(g, side.p, in_x, side.p_is_x)) {
        ++stats_.case2_plus_degree;
        return plus_by_degree(g, side.p, side.q, *w, in_x, side.p_is_x, side.np, side.nq, side.slack_p, side.slack_q);
      }
    }
    for (const Side& side : {x_side, y_side}) {
      InducedSubgraph sub = induced_subgraph(g, side.p);
      const auto want = static_cast<std::size_t>(side.np + 1);
      ClosedNeighborhoodChoice choice = max_closed_neighborhood(sub.graph, want);
      const std::int64_t need = side.np + 1 + r_ - side.slack_q;
      if (choice.set.size() == want && static_cast<std::int64_t>(choice.value) >= need) {
        ++stats_.case2_plus_neighborhood;
        VertexSet centers;
        for (Vertex v : choice.set) centers.push_back(sub.original[static_cast<std::size_t>(v)]);
        return plus_by_neighborhood(g, side.p, side.q, centers, in_x, side.p_is_x, side.nq, side.slack_q);
      }
    }
    CrossPools(xs, ys).place(arith.a_floor, arith.b_floor, r_, out);
    return out;
  }

  std::optional<Vertex> high_inner_degree(const Graph& g, const VertexSet& p, const std::vector<char>& in_x,
                                          bool p_is_x) const {
    for (Vertex v : p) {
      int inside = 0;
      for (Vertex w : g.neighbors(v)) inside += (in_x[static_cast<std::size_t>(w)] != 0) == p_is_x ? 1 : 0;
      if (inside >= r_) return v;
    }
    return std::nullopt;
  }

  // Extra star centered at w with min(slack_p - 1, r) leaves on its own side
  // and the rest across; the remaining cross stars still fit.
  StarPacking plus_by_degree(const Graph& g, const VertexSet& p, const VertexSet& q, Vertex w,
                             const std::vector<char>& in_x, bool p_is_x, std::int64_t np, std::int64_t nq,
                             std::int64_t slack_p, std::int64_t slack_q) {
    std::vector<char> used(g.vertex_count(), 0);
    used[static_cast<std::size_t>(w)] = 1;
    Star extra{w, {}};
    const std::int64_t own = std::min<std::int64_t>(slack_p - 1, r_);
    internal_check(r_ - own <= slack_q, "extra star needs too many cross leaves");
    for (Vertex v : g.neighbors(w)) {
      if (static_cast<std::int64_t>(extra.leaves.size()) == own) break;
      if ((in_x[static_cast<std::size_t>(v)] != 0) == p_is_x) {
        extra.leaves.push_back(v);
        used[static_cast<std::size_t>(v)] = 1;
      }
    }
    for (Vertex v : q) {
      if (static_cast<int>(extra.leaves.size()) == r_) break;
      extra.leaves.push_back(v);
      used[static_cast<std::size_t>(v)] = 1;
    }
    StarPacking out;
    out.stars.push_back(std::move(extra));
    CrossPools(minus(p, used), minus(q, used)).place(np, nq, r_, out);
    return out;
  }

  // np + 1 centers on side P whose closed neighborhood inside P is large:
  // give them exactly r - slack_q leaves from P in total, pad every center
  // with leaves from Q, then place nq stars centered on Q.
  StarPacking plus_by_neighborhood(const Graph& g, const VertexSet& p, const VertexSet& q, const VertexSet& centers,
                                   const std::vector<char>& in_x, bool p_is_x, std::int64_t nq, std::int64_t slack_q) {
    const std::size_t n = g.vertex_count();
    std::vector<char> used(n, 0);
    std::vector<int> owner(n, -1);
    for (std::size_t i = 0; i < centers.size(); ++i) used[static_cast<std::size_t>(centers[i])] = 1;
    for (std::size_t i = 0; i < centers.size(); ++i) {
      for (Vertex v : g.neighbors(centers[i])) {
        auto vi = static_cast<std::size_t>(v);
        if (!used[vi] && owner[vi] == -1 && (in_x[vi] != 0) == p_is_x) owner[vi] = static_cast<int>(i);
      }
    }
    std::vector<Star> stars;
    for (Vertex c : centers) stars.push_back(Star{c, {}});
    std::int64_t inner_leaves = r_ - slack_q;
    for (Vertex v : p) {
      if (inner_leaves == 0) break;
      int o = owner[static_cast<std::size_t>(v)];
      if (o < 0) continue;
      stars[static_cast<std::size_t>(o)].leaves.push_back(v);
      used[static_cast<std::size_t>(v)] = 1;
      --inner_leaves;
    }
    internal_check(inner_leaves == 0, "closed neighborhood too small for the extra star");
    std::size_t cursor = 0;
    VertexSet q_pool = q;
    for (auto& s : stars) {
      internal_check(s.leaves.size() < static_cast<std::size_t>(r_), "inner star already has r leaves");
      while (s.leaves.size() < static_cast<std::size_t>(r_)) {
        internal_check(cursor < q_pool.size(), "ran out of cross leaves");
        used[static_cast<std::size_t>(q_pool[cursor])] = 1;
        s.leaves.push_back(q_pool[cursor++]);
      }
    }
    StarPacking out;
    out.stars = std::move(stars);
    CrossPools(minus(p, used), minus(q, used)).place(0, nq, r_, out);
    return out;
  }

  int r_;
  const CographOptions& options_;
  CographStats stats_;
};

}  // namespace

bool is_cograph(const Graph& g) { return cograph_rec(g); }

std::vector<VertexSet> co_components(const Graph& g) { return complement_components(g); }

CoComponentSplit co_component_split(const Graph& g) {
  auto parts = complement_components(g);
  if (parts.size() < 2) {
    throw ContractError("graph on " + std::to_string(g.vertex_count()) +
                        " vertices is connected with a connected complement; it is not a cograph");
  }
  std::size_t largest = 0;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].size() > parts[largest].size()) largest = i;
  }
  CoComponentSplit out;
  out.x_side = parts[largest];
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != largest) out.y_side.insert(out.y_side.end(), parts[i].begin(), parts[i].end());
  }
  std::sort(out.y_side.begin(), out.y_side.end());
  return out;
}

Case2Arithmetic Case2Arithmetic::compute(std::int64_t x, std::int64_t y, std::int64_t r) {
  if (r < 2 || x > r * y || y > r * x) {
    throw InputError("Case 2 arithmetic needs x <= r*y and y <= r*x");
  }
  Case2Arithmetic a;
  a.x = x;
  a.y = y;
  a.r = r;
  a.denom = r * r - 1;
  const std::int64_t num_a = r * y - x;
  const std::int64_t num_b = r * x - y;
  a.a_floor = num_a / a.denom;
  a.b_floor = num_b / a.denom;
  a.eps_a_num = num_a % a.denom;
  a.eps_b_num = num_b % a.denom;
  const std::int64_t sy = r * a.eps_a_num + a.eps_b_num;
  const std::int64_t sx = r * a.eps_b_num + a.eps_a_num;
  if (sy % a.denom != 0 || sx % a.denom != 0) {
    throw ContractError("slack r*eps_a + eps_b is not an integer for x=" + std::to_string(x) + ", y=" + std::to_string(y));
  }
  a.slack_y = sy / a.denom;
  a.slack_x = sx / a.denom;
  if (a.a_floor * r + a.b_floor + a.slack_y != y || a.b_floor * r + a.a_floor + a.slack_x != x) {
    throw ContractError("Case 2 counting identity failed for x=" + std::to_string(x) + ", y=" + std::to_string(y));
  }
  return a;
}

ClosedNeighborhoodChoice max_closed_neighborhood(const Graph& g, std::size_t s, bool validate) {
  if (validate && !is_cograph(g)) throw ContractError("max_closed_neighborhood requires a cograph");
  struct Candidate {
    std::size_t value;
    std::size_t comp;
    int order;  // 0 = best single vertex, 1 = its complement partner
    Vertex vertex;
  };
  std::vector<Candidate> candidates;
  const auto parts = components(g);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& comp = parts[i];
    Vertex w = comp.front();
    for (Vertex v : comp) {
      if (g.degree(v) > g.degree(w)) w = v;
    }
    const std::size_t m = g.degree(w);
    candidates.push_back({m + 1, i, 0, w});
    if (comp.size() < 2) continue;
    InducedSubgraph sub = induced_subgraph(g, comp);
    auto co = complement_components(sub.graph);
    if (co.size() < 2) throw ContractError("component is connected in the complement; not a cograph");
    const Vertex w_local = sub.local[static_cast<std::size_t>(w)];
    Vertex z = -1;
    for (const auto& part : co) {
      if (!std::binary_search(part.begin(), part.end(), w_local)) {
        z = sub.original[static_cast<std::size_t>(part.front())];
        break;
      }
    }
    const std::size_t second = comp.size() - m - 1;
    internal_check(second < m + 1, "second pick outweighs the first");
    candidates.push_back({second, i, 1, z});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.value > b.value; });

  const std::size_t want = std::min(s, g.vertex_count());
  ClosedNeighborhoodChoice out;
  std::vector<char> chosen(g.vertex_count(), 0);
  for (const auto& c : candidates) {
    if (out.set.size() == want) break;
    out.set.push_back(c.vertex);
    chosen[static_cast<std::size_t>(c.vertex)] = 1;
    out.value += c.value;
  }
  for (std::size_t v = 0; v < g.vertex_count() && out.set.size() < want; ++v) {
    if (!chosen[v]) out.set.push_back(static_cast<Vertex>(v));
  }
  std::sort(out.set.begin(), out.set.end());
  internal_check(closed_neighborhood_size(g, out.set) == out.value, "closed neighborhood value mismatch");
  return out;
}

CographSolution solve_cograph(const Graph& g, int r, const CographOptions& options) {
  if (r < 3) throw InputError("the cograph solver requires r >= 3, got " + std::to_string(r));
  if (options.validate && !is_cograph(g)) throw ContractError("input graph is not a cograph (contains an induced P4)");
  CographSolver solver(r, options);
  CographSolution out;
  out.witness = solver.solve(g);
  out.count = static_cast<int>(out.witness.size());
  out.stats = solver.stats();
  if (!validate_packing(g, out.witness, r)) {
    throw ContractError("cograph solver produced an invalid packing; input is probably not a cograph");
  }
  return out;
}

}  // namespace starpack
