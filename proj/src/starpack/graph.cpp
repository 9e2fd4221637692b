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

#include "starpack/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "starpack/error.hpp"

namespace starpack {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) {
    throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(g.vertex_count()) + ")");
  }
}

}  // namespace

Graph::Graph(std::size_t n) : adj_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
  for (const auto& [u, v] : edges) {
    check_vertex(*this, u);
    check_vertex(*this, v);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = adj_[v];
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) {
      throw InputError("duplicate edge {" + std::to_string(v) + "," + std::to_string(*dup) + "}");
    }
  }
  edge_count_ = edges.size();
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& a = adj_[static_cast<std::size_t>(u)];
  const auto& b = adj_[static_cast<std::size_t>(v)];
  if (a.size() <= b.size()) return std::binary_search(a.begin(), a.end(), v);
  return std::binary_search(b.begin(), b.end(), u);
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : adj_) best = std::max(best, list.size());
  return best;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  auto& a = adj_[static_cast<std::size_t>(u)];
  auto pos = std::lower_bound(a.begin(), a.end(), v);
  if (pos != a.end() && *pos == v) {
    throw InputError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  a.insert(pos, v);
  auto& b = adj_[static_cast<std::size_t>(v)];
  b.insert(std::lower_bound(b.begin(), b.end(), u), u);
  ++edge_count_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

std::vector<int> component_ids(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> id(n, -1);
  std::vector<Vertex> stack;
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (id[s] != -1) continue;
    id[s] = next;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (id[static_cast<std::size_t>(w)] == -1) {
          id[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return id;
}

std::vector<VertexSet> components(const Graph& g) {
  auto id = component_ids(g);
  int count = id.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1;
  std::vector<VertexSet> out(static_cast<std::size_t>(count));
  for (std::size_t v = 0; v < id.size(); ++v) {
    out[static_cast<std::size_t>(id[v])].push_back(static_cast<Vertex>(v));
  }
  return out;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(n * (n - (n > 0 ? 1 : 0)) / 2 - g.edge_count());
  for (std::size_t u = 0; u < n; ++u) {
    auto nb = g.neighbors(static_cast<Vertex>(u));
    auto it = std::upper_bound(nb.begin(), nb.end(), static_cast<Vertex>(u));
    for (std::size_t v = u + 1; v < n; ++v) {
      if (it != nb.end() && static_cast<std::size_t>(*it) == v) {
        ++it;
        continue;
      }
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return Graph(n, edges);
}

std::vector<VertexSet> complement_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> unvisited(n);
  std::iota(unvisited.begin(), unvisited.end(), 0);
  std::vector<char> marked(n, 0);
  std::vector<Vertex> kept;
  std::vector<VertexSet> out;

  // BFS in the complement: from u, every still-unvisited vertex that is not
  // a neighbor of u is reached. Each scan either removes a vertex or pays for
  // one edge of g, so the total work is O(n + m).
  while (!unvisited.empty()) {
    VertexSet comp{unvisited.front()};
    unvisited.erase(unvisited.begin());
    for (std::size_t head = 0; head < comp.size() && !unvisited.empty(); ++head) {
      Vertex u = comp[head];
      for (Vertex w : g.neighbors(u)) marked[static_cast<std::size_t>(w)] = 1;
      kept.clear();
      for (Vertex w : unvisited) {
        if (marked[static_cast<std::size_t>(w)]) {
          kept.push_back(w);
        } else {
          comp.push_back(w);
        }
      }
      for (Vertex w : g.neighbors(u)) marked[static_cast<std::size_t>(w)] = 0;
      unvisited.swap(kept);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  const std::size_t n = g.vertex_count();
  InducedSubgraph out;
  out.local.assign(n, -1);
  out.original.assign(s.begin(), s.end());
  for (Vertex v : out.original) check_vertex(g, v);
  std::sort(out.original.begin(), out.original.end());
  auto dup = std::adjacent_find(out.original.begin(), out.original.end());
  if (dup != out.original.end()) {
    throw InputError("vertex " + std::to_string(*dup) + " listed twice in induced subgraph");
  }
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    out.local[static_cast<std::size_t>(out.original[i])] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    for (Vertex w : g.neighbors(out.original[i])) {
      Vertex j = out.local[static_cast<std::size_t>(w)];
      if (j > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  out.graph = Graph(out.original.size(), edges);
  return out;
}

InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> drop(g.vertex_count(), 0);
  for (Vertex v : s) {
    check_vertex(g, v);
    drop[static_cast<std::size_t>(v)] = 1;
  }
  VertexSet keep;
  for (std::size_t v = 0; v < drop.size(); ++v) {
    if (!drop[v]) keep.push_back(static_cast<Vertex>(v));
  }
  return induced_subgraph(g, keep);
}

namespace {

// Depth-first extension of induced paths. blocked[w] counts path vertices
// other than the current endpoint that are adjacent to w; a vertex can extend
// the path iff it is a neighbor of the endpoint, unused, and unblocked.
class InducedPathSearch {
 public:
  InducedPathSearch(const Graph& g, int d)
      : g_(g), d_(static_cast<std::size_t>(d)), blocked_(g.vertex_count(), 0),
        on_path_(g.vertex_count(), 0) {}

  std::optional<std::vector<Vertex>> run() {
    for (std::size_t s = 0; s < g_.vertex_count(); ++s) {
      path_.assign(1, static_cast<Vertex>(s));
      on_path_[s] = 1;
      if (extend()) return path_;
      on_path_[s] = 0;
    }
    return std::nullopt;
  }

 private:
  bool extend() {
    if (path_.size() == d_) return true;
    const Vertex last = path_.back();
    std::vector<Vertex> candidates;
    for (Vertex w : g_.neighbors(last)) {
      auto wi = static_cast<std::size_t>(w);
      if (!on_path_[wi] && blocked_[wi] == 0) candidates.push_back(w);
    }
    if (candidates.empty()) return false;
    for (Vertex w : g_.neighbors(last)) ++blocked_[static_cast<std::size_t>(w)];
    for (Vertex w : candidates) {
      path_.push_back(w);
      on_path_[static_cast<std::size_t>(w)] = 1;
      if (extend()) return true;
      on_path_[static_cast<std::size_t>(w)] = 0;
      path_.pop_back();
    }
    for (Vertex w : g_.neighbors(last)) --blocked_[static_cast<std::size_t>(w)];
    return false;
  }

  const Graph& g_;
  std::size_t d_;
  std::vector<int> blocked_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_induced_path(const Graph& g, int d) {
  if (d < 1) throw InputError("induced path length must be at least 1, got " + std::to_string(d));
  if (static_cast<std::size_t>(d) > g.vertex_count()) return std::nullopt;
  return InducedPathSearch(g, d).run();
}

bool is_split(const Graph& g) {
  std::vector<std::size_t> deg(g.vertex_count());
  for (std::size_t v = 0; v < deg.size(); ++v) deg[v] = g.degree(static_cast<Vertex>(v));
  std::sort(deg.begin(), deg.end(), std::greater<>());
  // m = max{i : d_i >= i - 1} with 1-based i.
  std::size_t m = 0;
  for (std::size_t i = 1; i <= deg.size(); ++i) {
    if (deg[i - 1] + 1 >= i) m = i;
  }
  std::size_t head = std::accumulate(deg.begin(), deg.begin() + static_cast<std::ptrdiff_t>(m), std::size_t{0});
  std::size_t tail = std::accumulate(deg.begin() + static_cast<std::ptrdiff_t>(m), deg.end(), std::size_t{0});
  return head == m * (m == 0 ? 0 : m - 1) + tail;
}

bool is_split_partition(const Graph& g, std::span<const Vertex> clique) {
  std::vector<char> in_clique(g.vertex_count(), 0);
  for (Vertex v : clique) {
    check_vertex(g, v);
    in_clique[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i < clique.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.size(); ++j) {
      if (!g.adjacent(clique[i], clique[j])) return false;
    }
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (in_clique[v]) continue;
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
      if (!in_clique[static_cast<std::size_t>(w)]) return false;
    }
  }
  return true;
}

std::size_t closed_neighborhood_size(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::size_t count = 0;
  auto visit = [&](Vertex v) {
    if (!seen[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = 1;
      ++count;
    }
  };
  for (Vertex v : s) {
    check_vertex(g, v);
    visit(v);
    for (Vertex w : g.neighbors(v)) visit(w);
  }
  return count;
}

VertexSet make_vertex_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

}  // namespace starpack
