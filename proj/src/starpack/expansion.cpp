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

#include "starpack/expansion.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "starpack/error.hpp"

namespace starpack {

namespace {

void ensure(bool ok, const char* what) {
  if (!ok) throw ContractError(std::string("expansion invariant violated: ") + what);
}

// Bipartite graph on local indices: x in [0, nx), y in [0, ny).
struct LocalBipartite {
  int ny = 0;
  std::vector<std::vector<int>> adj;  // x -> sorted y indices

  int nx() const { return static_cast<int>(adj.size()); }
};

// Kuhn's augmenting-path matching where every X vertex is replicated
// `copies` times. Clone c belongs to X vertex c / copies. Returns mate of
// each Y vertex (a clone id or -1).
class ReplicatedMatcher {
 public:
  ReplicatedMatcher(const LocalBipartite& g, int copies)
      : g_(g), copies_(copies), mate_y_(static_cast<std::size_t>(g.ny), -1),
        mate_clone_(static_cast<std::size_t>(g.nx() * copies), -1),
        seen_(static_cast<std::size_t>(g.ny), 0) {
    for (int c = 0; c < g.nx() * copies; ++c) {
      ++stamp_;
      if (augment(c)) ++size_;
    }
  }

  int size() const { return size_; }
  const std::vector<int>& mate_y() const { return mate_y_; }
  const std::vector<int>& mate_clone() const { return mate_clone_; }

 private:
  bool augment(int clone) {
    for (int y : g_.adj[static_cast<std::size_t>(clone / copies_)]) {
      auto yi = static_cast<std::size_t>(y);
      if (seen_[yi] == stamp_) continue;
      seen_[yi] = stamp_;
      if (mate_y_[yi] == -1 || augment(mate_y_[yi])) {
        mate_y_[yi] = clone;
        mate_clone_[static_cast<std::size_t>(clone)] = y;
        return true;
      }
    }
    return false;
  }

  const LocalBipartite& g_;
  int copies_;
  std::vector<int> mate_y_;
  std::vector<int> mate_clone_;
  std::vector<int> seen_;
  int stamp_ = 0;
  int size_ = 0;
};

struct LocalExpansion {
  std::vector<int> s;
  std::vector<int> t;
  std::vector<std::pair<int, std::vector<int>>> stars;
};

std::vector<int> y_degrees(const LocalBipartite& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.ny), 0);
  for (const auto& list : g.adj) {
    for (int y : list) ++deg[static_cast<std::size_t>(y)];
  }
  return deg;
}

// Match r clones of every X vertex; the Y vertices left unmatched exist
// because any clone matching has size <= r * m < |Y|. Everything reachable
// from them by alternating paths forms T, and the X vertices reached form S:
// S = N(T) by construction, and every clone of a reached X vertex is matched
// into T, or the alternating path would augment.
LocalExpansion expand_local(const LocalBipartite& g, int r) {
  if (r < 1) throw InputError("expansion requires r >= 1");
  auto deg = y_degrees(g);
  for (int y = 0; y < g.ny; ++y) {
    if (deg[static_cast<std::size_t>(y)] == 0) {
      throw InputError("expansion precondition failed: Y vertex has no neighbor in X");
    }
  }
  const int m = ReplicatedMatcher(g, 1).size();
  if (static_cast<long long>(g.ny) <= static_cast<long long>(r) * m) {
    throw InputError("expansion precondition failed: |Y| = " + std::to_string(g.ny) +
                     " is not larger than r * matching = " + std::to_string(r * m));
  }

  ReplicatedMatcher clones(g, r);
  std::vector<std::vector<int>> y_adj(static_cast<std::size_t>(g.ny));
  for (int x = 0; x < g.nx(); ++x) {
    for (int y : g.adj[static_cast<std::size_t>(x)]) y_adj[static_cast<std::size_t>(y)].push_back(x);
  }

  std::vector<char> in_t(static_cast<std::size_t>(g.ny), 0);
  std::vector<char> in_s(static_cast<std::size_t>(g.nx()), 0);
  std::vector<int> queue;
  for (int y = 0; y < g.ny; ++y) {
    if (clones.mate_y()[static_cast<std::size_t>(y)] == -1) {
      in_t[static_cast<std::size_t>(y)] = 1;
      queue.push_back(y);
    }
  }
  ensure(!queue.empty(), "no unmatched Y vertex");
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int y = queue[head];
    for (int x : y_adj[static_cast<std::size_t>(y)]) {
      if (in_s[static_cast<std::size_t>(x)]) continue;
      in_s[static_cast<std::size_t>(x)] = 1;
      for (int c = x * r; c < (x + 1) * r; ++c) {
        int mate = clones.mate_clone()[static_cast<std::size_t>(c)];
        ensure(mate != -1, "reachable clone left unmatched");
        if (!in_t[static_cast<std::size_t>(mate)]) {
          in_t[static_cast<std::size_t>(mate)] = 1;
          queue.push_back(mate);
        }
      }
    }
  }

  LocalExpansion out;
  for (int x = 0; x < g.nx(); ++x) {
    if (!in_s[static_cast<std::size_t>(x)]) continue;
    out.s.push_back(x);
    std::vector<int> leaves;
    for (int c = x * r; c < (x + 1) * r; ++c) leaves.push_back(clones.mate_clone()[static_cast<std::size_t>(c)]);
    std::sort(leaves.begin(), leaves.end());
    out.stars.emplace_back(x, std::move(leaves));
  }
  for (int y = 0; y < g.ny; ++y) {
    if (in_t[static_cast<std::size_t>(y)]) out.t.push_back(y);
  }

  ensure(!out.s.empty() && !out.t.empty(), "empty S or T");
  std::vector<char> leaf_used(static_cast<std::size_t>(g.ny), 0);
  for (const auto& [center, leaves] : out.stars) {
    for (int y : leaves) {
      ensure(in_t[static_cast<std::size_t>(y)], "star leaf outside T");
      ensure(!leaf_used[static_cast<std::size_t>(y)], "star leaves overlap");
      ensure(std::binary_search(g.adj[static_cast<std::size_t>(center)].begin(),
                                g.adj[static_cast<std::size_t>(center)].end(), y),
             "star leaf not adjacent to its center");
      leaf_used[static_cast<std::size_t>(y)] = 1;
    }
  }
  for (int y : out.t) {
    for (int x : y_adj[static_cast<std::size_t>(y)]) ensure(in_s[static_cast<std::size_t>(x)], "T has a neighbor outside S");
  }
  return out;
}

LocalBipartite restrict(const LocalBipartite& g, const std::vector<int>& xs, const std::vector<int>& ys) {
  std::vector<int> y_local(static_cast<std::size_t>(g.ny), -1);
  for (std::size_t i = 0; i < ys.size(); ++i) y_local[static_cast<std::size_t>(ys[i])] = static_cast<int>(i);
  LocalBipartite out;
  out.ny = static_cast<int>(ys.size());
  out.adj.resize(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (int y : g.adj[static_cast<std::size_t>(xs[i])]) {
      int local = y_local[static_cast<std::size_t>(y)];
      if (local >= 0) out.adj[i].push_back(local);
    }
  }
  return out;
}

LocalBipartite to_local(const BipartiteView& bv) {
  LocalBipartite g;
  g.ny = static_cast<int>(bv.y_side().size());
  g.adj = bv.x_adjacency();
  return g;
}

StarPacking to_host(const BipartiteView& bv, const std::vector<std::pair<int, std::vector<int>>>& stars) {
  StarPacking out;
  for (const auto& [x, leaves] : stars) {
    Star s{bv.x_side()[static_cast<std::size_t>(x)], {}};
    for (int y : leaves) s.leaves.push_back(bv.y_side()[static_cast<std::size_t>(y)]);
    std::sort(s.leaves.begin(), s.leaves.end());
    out.stars.push_back(std::move(s));
  }
  std::sort(out.stars.begin(), out.stars.end(), [](const Star& a, const Star& b) { return a.center < b.center; });
  return out;
}

VertexSet to_host_set(const VertexSet& side, const std::vector<int>& idx) {
  VertexSet out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(side[static_cast<std::size_t>(i)]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

BipartiteView::BipartiteView(const Graph& host, VertexSet x_side, VertexSet y_side)
    : host_(&host), x_(std::move(x_side)), y_(std::move(y_side)) {
  std::sort(x_.begin(), x_.end());
  std::sort(y_.begin(), y_.end());
  std::vector<int> y_index(host.vertex_count(), -1);
  std::vector<char> in_x(host.vertex_count(), 0);
  for (std::size_t i = 0; i < x_.size(); ++i) {
    Vertex v = x_[i];
    if (!host.contains(v)) throw InputError("X vertex " + std::to_string(v) + " out of range");
    if (in_x[static_cast<std::size_t>(v)]) throw InputError("X vertex " + std::to_string(v) + " repeated");
    in_x[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i < y_.size(); ++i) {
    Vertex v = y_[i];
    if (!host.contains(v)) throw InputError("Y vertex " + std::to_string(v) + " out of range");
    if (in_x[static_cast<std::size_t>(v)]) throw InputError("vertex " + std::to_string(v) + " on both sides");
    if (y_index[static_cast<std::size_t>(v)] != -1) throw InputError("Y vertex " + std::to_string(v) + " repeated");
    y_index[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  x_adj_.resize(x_.size());
  y_deg_.assign(y_.size(), 0);
  for (std::size_t i = 0; i < x_.size(); ++i) {
    for (Vertex w : host.neighbors(x_[i])) {
      int j = y_index[static_cast<std::size_t>(w)];
      if (j >= 0) {
        x_adj_[i].push_back(j);
        ++y_deg_[static_cast<std::size_t>(j)];
      }
    }
  }
}

Matching max_matching(const BipartiteView& bv) {
  LocalBipartite g = to_local(bv);
  ReplicatedMatcher matcher(g, 1);
  Matching out;
  for (int x = 0; x < g.nx(); ++x) {
    int y = matcher.mate_clone()[static_cast<std::size_t>(x)];
    if (y >= 0) out.emplace_back(bv.x_side()[static_cast<std::size_t>(x)], bv.y_side()[static_cast<std::size_t>(y)]);
  }
  return out;
}

std::optional<StarPacking> stars_into(const BipartiteView& bv, int r) {
  if (r < 1) throw InputError("star arity r must be at least 1");
  LocalBipartite g = to_local(bv);
  ReplicatedMatcher clones(g, r);
  if (clones.size() != g.nx() * r) return std::nullopt;
  std::vector<std::pair<int, std::vector<int>>> stars;
  for (int x = 0; x < g.nx(); ++x) {
    std::vector<int> leaves;
    for (int c = x * r; c < (x + 1) * r; ++c) leaves.push_back(clones.mate_clone()[static_cast<std::size_t>(c)]);
    stars.emplace_back(x, std::move(leaves));
  }
  return to_host(bv, stars);
}

Expansion expansion(const BipartiteView& bv, int r) {
  LocalExpansion local = expand_local(to_local(bv), r);
  Expansion out;
  out.s = to_host_set(bv.x_side(), local.s);
  out.t = to_host_set(bv.y_side(), local.t);
  out.stars = to_host(bv, local.stars);
  return out;
}

ExpansionPartition modified_expansion(const BipartiteView& bv, int r) {
  if (r < 1) throw InputError("modified expansion requires r >= 1");
  const LocalBipartite full = to_local(bv);
  for (int d : bv.y_degrees()) {
    if (d == 0) throw InputError("modified expansion precondition failed: Y vertex has no neighbor in X");
  }

  std::vector<int> xs(static_cast<std::size_t>(full.nx()));
  std::vector<int> ys(static_cast<std::size_t>(full.ny));
  std::iota(xs.begin(), xs.end(), 0);
  std::iota(ys.begin(), ys.end(), 0);
  std::vector<int> b1, b2;
  std::vector<std::pair<int, std::vector<int>>> stars;
  int iterations = 0;

  while (true) {
    LocalBipartite sub = restrict(full, xs, ys);
    const long long m = ReplicatedMatcher(sub, 1).size();
    if (static_cast<long long>(ys.size()) <= r * m) break;

    LocalExpansion ex = expand_local(sub, r);
    ++iterations;
    std::vector<char> drop_x(xs.size(), 0), drop_y(ys.size(), 0);
    for (int i : ex.s) {
      drop_x[static_cast<std::size_t>(i)] = 1;
      b1.push_back(xs[static_cast<std::size_t>(i)]);
    }
    for (int j : ex.t) {
      drop_y[static_cast<std::size_t>(j)] = 1;
      b2.push_back(ys[static_cast<std::size_t>(j)]);
    }
    for (auto& [x, leaves] : ex.stars) {
      for (int& y : leaves) y = ys[static_cast<std::size_t>(y)];
      stars.emplace_back(xs[static_cast<std::size_t>(x)], std::move(leaves));
    }

    // Y' vertices isolated from X' join T.
    std::vector<char> touched(ys.size(), 0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (drop_x[i]) continue;
      for (int j : sub.adj[i]) touched[static_cast<std::size_t>(j)] = 1;
    }
    std::vector<int> next_xs, next_ys;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!drop_x[i]) next_xs.push_back(xs[i]);
    }
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (drop_y[j]) continue;
      if (touched[j]) {
        next_ys.push_back(ys[j]);
      } else {
        b2.push_back(ys[j]);
      }
    }
    xs = std::move(next_xs);
    ys = std::move(next_ys);
    if (static_cast<long long>(ys.size()) <= static_cast<long long>(r) * static_cast<long long>(xs.size())) break;
  }

  ExpansionPartition out;
  out.a1 = to_host_set(bv.x_side(), xs);
  out.a2 = to_host_set(bv.y_side(), ys);
  out.b1 = to_host_set(bv.x_side(), b1);
  out.b2 = to_host_set(bv.y_side(), b2);
  out.stars = to_host(bv, stars);
  out.iterations = iterations;

  const Graph& host = bv.host();
  ensure(out.a1.size() + out.b1.size() == bv.x_side().size(), "X not partitioned");
  ensure(out.a2.size() + out.b2.size() == bv.y_side().size(), "Y not partitioned");
  ensure(out.a2.size() <= static_cast<std::size_t>(r) * out.a1.size(), "|A2| > r|A1|");
  ensure(out.stars.size() == out.b1.size(), "star count differs from |B1|");
  for (Vertex a : out.a1) {
    for (Vertex b : out.b2) ensure(!host.adjacent(a, b), "edge between A1 and B2");
  }
  std::vector<char> used(host.vertex_count(), 0);
  for (const auto& s : out.stars.stars) {
    ensure(std::binary_search(out.b1.begin(), out.b1.end(), s.center), "star center outside B1");
    ensure(s.leaves.size() == static_cast<std::size_t>(r), "star with wrong leaf count");
    for (Vertex leaf : s.leaves) {
      ensure(std::binary_search(out.b2.begin(), out.b2.end(), leaf), "star leaf outside B2");
      ensure(!used[static_cast<std::size_t>(leaf)], "star leaves overlap");
      ensure(host.adjacent(s.center, leaf), "star leaf not adjacent");
      used[static_cast<std::size_t>(leaf)] = 1;
    }
  }
  return out;
}

}  // namespace starpack
