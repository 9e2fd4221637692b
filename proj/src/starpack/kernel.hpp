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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "starpack/graph.hpp"
#include "starpack/packing.hpp"

namespace starpack {

// One instance of r-star packing: does g contain k vertex-disjoint copies of
// K_{1,r}? The graph is promised to have no induced path on d vertices.
struct PackingInstance {
  Graph g;
  int k = 0;
  int r = 2;
  int d = 3;

  // Throws InputError unless k >= 0, r >= 2 and d >= 3.
  void validate() const;
};

// A pair (C, L) such that G[C ∪ L] packs |C| r-stars (evidenced by
// `witness`) and no r-star meets L once C is deleted.
struct Constellation {
  VertexSet c;
  VertexSet l;
  StarPacking witness;
};

struct ConstellationCheck {
  bool holds = false;
  // |C| disjoint stars inside G[C ∪ L] when the packing condition holds.
  StarPacking witness;
  // Why the check failed; empty when it holds.
  std::string refutation;
};

// Vertices with max{d(v): v ∈ N[u]} < r, i.e. in no r-star.
VertexSet small_vertices(const Graph& g, int r);

// Deletes small vertices until none is left. k, r and d are unchanged.
PackingInstance simplify(const PackingInstance& inst);

// Same, also reporting which original vertices survive.
PackingInstance simplify(const PackingInstance& inst, VertexSet* kept);

// Checks both defining conditions. The packing condition is settled by the
// supplied witness when given; otherwise by |C| stars centered in C with
// leaves in L (r-fold matching), and finally by the exact oracle when
// |C ∪ L| <= 24. Throws InputError when c and l overlap or leave the range.
ConstellationCheck is_constellation(const Graph& g, const VertexSet& c, const VertexSet& l, int r,
                                    const StarPacking* witness = nullptr);

// Rule 2: returns (G[V \ (C ∪ L)], max(0, k - |C|)). Throws ContractError
// when `con` is not a constellation of inst.g.
PackingInstance apply_constellation(const PackingInstance& inst, const Constellation& con,
                                    VertexSet* kept = nullptr);

enum class StepType { simplify, move_small_degree, move_expansion, constellation, terminate };

const char* to_string(StepType step);

// One logged step of the kernelization with the four-way bookkeeping sizes
// after the step.
struct TraceRecord {
  StepType step = StepType::terminate;
  std::size_t vertices_removed = 0;
  int k_delta = 0;
  std::size_t big = 0;
  std::size_t small = 0;
  std::size_t b_d = 0;
  std::size_t u_d = 0;
};

// Partition of the packed vertices S into Big/Small and of D = V \ S into
// B(D)/U(D), indexed by vertex.
class KernelState {
 public:
  enum class Part : std::uint8_t { big, small, b_d, u_d };

  KernelState(std::size_t n, const VertexSet& packed);

  Part part(Vertex v) const { return part_[static_cast<std::size_t>(v)]; }
  void move(Vertex v, Part to);

  std::size_t count(Part p) const { return counts_[static_cast<std::size_t>(p)]; }
  VertexSet members(Part p) const;

  // Throws ContractError when |B(D)| > r^{d+1} |Small(S)| or an edge joins
  // U(D) to Small(S) ∪ B(D).
  void check_properties(const Graph& g, int r, int d) const;

 private:
  std::vector<Part> part_;
  std::size_t counts_[4] = {0, 0, 0, 0};
};

enum class KernelOutcome { kernel, trivial_yes, trivial_no };

const char* to_string(KernelOutcome outcome);

struct KernelOptions {
  // Verify that the input has no induced P_d before starting. Exponential in
  // d; off by default.
  bool verify_class = false;
  // Called before each Rule 2 application with the instance it applies to.
  std::function<void(const PackingInstance&, const Constellation&)> on_constellation;
};

struct KernelResult {
  PackingInstance out;
  KernelOutcome outcome = KernelOutcome::kernel;
  std::vector<TraceRecord> trace;
  // Input vertices surviving in `out` (out vertex i is kept[i]); empty for
  // the canonical trivial instances.
  VertexSet kept;
};

// r^e, saturating at INT64_MAX.
std::int64_t saturating_pow(std::int64_t r, int e);

// (k-1)(r+1)(r^{d+1}+1), saturating; 0 for k <= 1.
std::int64_t kernel_vertex_bound(int k, int r, int d);

// k disjoint copies of K_{r+1}: a yes-instance with no induced P_3.
Graph canonical_yes_graph(int k, int r);

// Equivalent instance with at most (k-1)(r+1)(r^{d+1}+1) vertices. Throws
// InputError for bad parameters and ContractError when the graph turns out
// not to be P_d-free (oversized component of G[D] or a failed invariant).
KernelResult kernelize(const PackingInstance& inst, const KernelOptions& options = {});

}  // namespace starpack
