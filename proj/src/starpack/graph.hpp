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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace starpack {

using Vertex = std::int32_t;

// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1. Neighbor lists are kept sorted,
// so `adjacent` is a binary search and iteration order is deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  // Throws InputError on self-loops, duplicate edges or out-of-range ends.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool empty() const noexcept { return adj_.empty(); }

  bool contains(Vertex v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < adj_.size();
  }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  // Δ(G); 0 for the empty graph.
  std::size_t max_degree() const noexcept;

  void add_edge(Vertex u, Vertex v);

  // All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

// Connected components ordered by their smallest vertex; each component is
// sorted.
std::vector<VertexSet> components(const Graph& g);

// Component id per vertex, matching the order of `components`.
std::vector<int> component_ids(const Graph& g);

Graph complement(const Graph& g);

// Components of the complement, computed without materializing it.
// Same ordering contract as `components`.
std::vector<VertexSet> complement_components(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  // original[new] = old vertex. Ascending, so new indices follow old order.
  VertexSet original;
  // local[old] = new vertex, or -1 when old is not in the subgraph.
  std::vector<Vertex> local;
};

// G[s]. `s` may be unsorted but must not contain duplicates.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

// G - s, i.e. G[V \ s].
InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> s);

// Returns d vertices forming an induced path (consecutive ones adjacent, no
// other pair adjacent), or nothing when g is P_d-free. Throws InputError for
// d < 1.
std::optional<std::vector<Vertex>> find_induced_path(const Graph& g, int d);

inline bool has_induced_path(const Graph& g, int d) { return find_induced_path(g, d).has_value(); }

// Split-graph recognition from the sorted degree sequence.
bool is_split(const Graph& g);

// True when `clique` is a clique and every other vertex forms an independent
// set.
bool is_split_partition(const Graph& g, std::span<const Vertex> clique);

// |N[s]|.
std::size_t closed_neighborhood_size(const Graph& g, std::span<const Vertex> s);

// Sorts and deduplicates.
VertexSet make_vertex_set(std::vector<Vertex> vs);

}  // namespace starpack
