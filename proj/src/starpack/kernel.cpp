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

#include "starpack/kernel.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "starpack/error.hpp"
#include "starpack/expansion.hpp"

namespace starpack {

namespace {

constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();

std::int64_t saturating_mul(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kInt64Max / b) return kInt64Max;
  return a * b;
}

std::int64_t saturating_add(std::int64_t a, std::int64_t b) { return a > kInt64Max - b ? kInt64Max : a + b; }

VertexSet identity_ids(std::size_t n) {
  VertexSet ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

// ids[i] is the original id of current vertex i; `kept` lists current
// vertices that survive a deletion.
VertexSet compose(const VertexSet& ids, const VertexSet& kept) {
  VertexSet out;
  out.reserve(kept.size());
  for (Vertex v : kept) out.push_back(ids[static_cast<std::size_t>(v)]);
  return out;
}

void check_range(const Graph& g, const VertexSet& s, const char* name) {
  for (Vertex v : s) {
    if (!g.contains(v)) throw InputError(std::string(name) + " vertex " + std::to_string(v) + " out of range");
  }
}

}  // namespace

void PackingInstance::validate() const {
  if (k < 0) throw InputError("k must be non-negative, got " + std::to_string(k));
  if (r < 2) throw InputError("star arity r must be at least 2, got " + std::to_string(r));
  if (d < 3) throw InputError("forbidden path length d must be at least 3, got " + std::to_string(d));
}

VertexSet small_vertices(const Graph& g, int r) {
  const auto need = static_cast<std::size_t>(std::max(r, 0));
  VertexSet out;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    auto v = static_cast<Vertex>(u);
    bool small = g.degree(v) < need;
    for (Vertex w : g.neighbors(v)) {
      if (!small) break;
      small = g.degree(w) < need;
    }
    if (small) out.push_back(v);
  }
  return out;
}

PackingInstance simplify(const PackingInstance& inst) { return simplify(inst, nullptr); }

PackingInstance simplify(const PackingInstance& inst, VertexSet* kept) {
  PackingInstance out = inst;
  VertexSet ids = identity_ids(inst.g.vertex_count());
  // Deleting small vertices only lowers degrees, so the whole batch found in
  // one sweep can go at once; repeat until a sweep finds nothing.
  while (true) {
    VertexSet small = small_vertices(out.g, out.r);
    if (small.empty()) break;
    InducedSubgraph rest = remove_vertices(out.g, small);
    ids = compose(ids, rest.original);
    out.g = std::move(rest.graph);
  }
  if (kept) *kept = std::move(ids);
  return out;
}

ConstellationCheck is_constellation(const Graph& g, const VertexSet& c, const VertexSet& l, int r,
                                    const StarPacking* witness) {
  if (r < 1) throw InputError("star arity r must be at least 1");
  check_range(g, c, "C");
  check_range(g, l, "L");
  std::vector<char> in_c(g.vertex_count(), 0), in_union(g.vertex_count(), 0);
  for (Vertex v : c) {
    if (in_c[static_cast<std::size_t>(v)]) throw InputError("C lists vertex " + std::to_string(v) + " twice");
    in_c[static_cast<std::size_t>(v)] = 1;
    in_union[static_cast<std::size_t>(v)] = 1;
  }
  for (Vertex v : l) {
    if (in_c[static_cast<std::size_t>(v)]) throw InputError("C and L share vertex " + std::to_string(v));
    if (in_union[static_cast<std::size_t>(v)]) throw InputError("L lists vertex " + std::to_string(v) + " twice");
    in_union[static_cast<std::size_t>(v)] = 1;
  }

  ConstellationCheck out;
  bool packed = false;
  if (witness) {
    bool inside = std::all_of(witness->stars.begin(), witness->stars.end(), [&](const Star& s) {
      return g.contains(s.center) && in_union[static_cast<std::size_t>(s.center)] &&
             std::all_of(s.leaves.begin(), s.leaves.end(),
                         [&](Vertex v) { return g.contains(v) && in_union[static_cast<std::size_t>(v)]; });
    });
    if (!inside || witness->size() != c.size() || !validate_packing(g, *witness, r)) {
      out.refutation = "supplied witness is not |C| disjoint r-stars inside G[C ∪ L]";
      return out;
    }
    out.witness = *witness;
    packed = true;
  } else if (auto stars = stars_into(BipartiteView(g, c, l), r)) {
    out.witness = std::move(*stars);
    packed = true;
  } else if (c.size() + l.size() <= 24) {
    VertexSet both = c;
    both.insert(both.end(), l.begin(), l.end());
    InducedSubgraph sub = induced_subgraph(g, both);
    OptimalPacking best = optimal_packing(sub.graph, r);
    if (static_cast<std::size_t>(best.count) >= c.size()) {
      best.witness.stars.resize(c.size());
      out.witness = lift_packing(best.witness, sub.original);
      packed = true;
    }
  }
  if (!packed) {
    out.refutation = "G[C ∪ L] does not contain |C| = " + std::to_string(c.size()) + " disjoint r-stars";
    return out;
  }

  InducedSubgraph rest = remove_vertices(g, c);
  VertexSet local_l;
  local_l.reserve(l.size());
  for (Vertex v : l) local_l.push_back(rest.local[static_cast<std::size_t>(v)]);
  if (star_exists_intersecting(rest.graph, local_l, r)) {
    out.witness = {};
    out.refutation = "an r-star intersects L in G - C";
    return out;
  }
  out.holds = true;
  return out;
}

PackingInstance apply_constellation(const PackingInstance& inst, const Constellation& con, VertexSet* kept) {
  const bool has_witness = !con.witness.empty() || con.c.empty();
  ConstellationCheck check = is_constellation(inst.g, con.c, con.l, inst.r, has_witness ? &con.witness : nullptr);
  if (!check.holds) throw ContractError("not a constellation: " + check.refutation);
  VertexSet gone = con.c;
  gone.insert(gone.end(), con.l.begin(), con.l.end());
  InducedSubgraph rest = remove_vertices(inst.g, gone);
  PackingInstance out{std::move(rest.graph), std::max(0, inst.k - static_cast<int>(con.c.size())), inst.r, inst.d};
  if (kept) *kept = std::move(rest.original);
  return out;
}

const char* to_string(StepType step) {
  switch (step) {
    case StepType::simplify: return "simplify";
    case StepType::move_small_degree: return "move-small-degree";
    case StepType::move_expansion: return "move-expansion";
    case StepType::constellation: return "constellation";
    case StepType::terminate: return "terminate";
  }
  return "unknown";
}

const char* to_string(KernelOutcome outcome) {
  switch (outcome) {
    case KernelOutcome::kernel: return "kernel";
    case KernelOutcome::trivial_yes: return "trivial-yes";
    case KernelOutcome::trivial_no: return "trivial-no";
  }
  return "unknown";
}

KernelState::KernelState(std::size_t n, const VertexSet& packed) : part_(n, Part::u_d) {
  counts_[static_cast<std::size_t>(Part::u_d)] = n;
  for (Vertex v : packed) move(v, Part::big);
}

void KernelState::move(Vertex v, Part to) {
  auto& slot = part_[static_cast<std::size_t>(v)];
  --counts_[static_cast<std::size_t>(slot)];
  ++counts_[static_cast<std::size_t>(to)];
  slot = to;
}

VertexSet KernelState::members(Part p) const {
  VertexSet out;
  for (std::size_t v = 0; v < part_.size(); ++v) {
    if (part_[v] == p) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

void KernelState::check_properties(const Graph& g, int r, int d) const {
  const std::int64_t cap = saturating_mul(saturating_pow(r, d + 1), static_cast<std::int64_t>(count(Part::small)));
  if (static_cast<std::int64_t>(count(Part::b_d)) > cap) {
    throw ContractError("kernel invariant violated: |B(D)| = " + std::to_string(count(Part::b_d)) +
                        " exceeds r^(d+1)|Small(S)|");
  }
  for (std::size_t v = 0; v < part_.size(); ++v) {
    if (part_[v] != Part::u_d) continue;
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
      Part p = part(w);
      if (p == Part::small || p == Part::b_d) {
        throw ContractError("kernel invariant violated: U(D) vertex " + std::to_string(v) +
                            " adjacent to Small(S) ∪ B(D) vertex " + std::to_string(w));
      }
    }
  }
}

std::int64_t saturating_pow(std::int64_t r, int e) {
  std::int64_t out = 1;
  for (int i = 0; i < e; ++i) out = saturating_mul(out, r);
  return out;
}

std::int64_t kernel_vertex_bound(int k, int r, int d) {
  if (k <= 1) return 0;
  std::int64_t b = saturating_mul(static_cast<std::int64_t>(k) - 1, static_cast<std::int64_t>(r) + 1);
  return saturating_mul(b, saturating_add(saturating_pow(r, d + 1), 1));
}

Graph canonical_yes_graph(int k, int r) {
  const std::size_t block = static_cast<std::size_t>(r) + 1;
  std::vector<Edge> edges;
  for (int copy = 0; copy < k; ++copy) {
    auto base = static_cast<Vertex>(static_cast<std::size_t>(copy) * block);
    for (Vertex i = 0; i < static_cast<Vertex>(block); ++i) {
      for (Vertex j = i + 1; j < static_cast<Vertex>(block); ++j) edges.emplace_back(base + i, base + j);
    }
  }
  return Graph(static_cast<std::size_t>(std::max(k, 0)) * block, edges);
}

namespace {

class Kernelizer {
 public:
  using Part = KernelState::Part;

  Kernelizer(const PackingInstance& inst, const KernelOptions& options)
      : g_(inst.g), k_(inst.k), r_(inst.r), d_(inst.d), ids_(identity_ids(inst.g.vertex_count())), options_(options) {}

  KernelResult run() {
    while (true) {
      if (k_ <= 0) return trivial(true, 0);
      if (k_ == 1) return trivial(g_.max_degree() >= static_cast<std::size_t>(r_), 1);

      VertexSet kept;
      const std::size_t before = g_.vertex_count();
      PackingInstance reduced = simplify(PackingInstance{std::move(g_), k_, r_, d_}, &kept);
      g_ = std::move(reduced.g);
      ids_ = compose(ids_, kept);
      if (g_.vertex_count() < before) log(StepType::simplify, before - g_.vertex_count(), 0, nullptr);

      StarPacking packing = greedy_maximal_packing(g_, r_);
      if (packing.size() >= static_cast<std::size_t>(k_)) return trivial(true, k_);

      if (!partition(packing.vertices())) return finish();
    }
  }

 private:
  // Runs the Big/Small/B/U loop. Returns true when a constellation was
  // removed and the pipeline must restart on the smaller instance.
  bool partition(const VertexSet& packed) {
    const std::size_t n = g_.vertex_count();
    state_.emplace(n, packed);
    components_of_d(packed);

    while (true) {
      std::vector<char> seen(n, 0);
      std::size_t frontier = 0;
      for (Vertex b : state_->members(Part::big)) {
        for (Vertex w : g_.neighbors(b)) {
          if (state_->part(w) == Part::u_d && !seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = 1;
            ++frontier;
          }
        }
      }
      if (static_cast<std::int64_t>(frontier) <= static_cast<std::int64_t>(r_) * static_cast<std::int64_t>(state_->count(Part::big))) {
        return false;
      }

      if (auto u = low_degree_big_vertex()) {
        VertexSet moved{*u};
        absorb(moved);
        log(StepType::move_small_degree, 0, 0, &*state_);
      } else {
        VertexSet big = state_->members(Part::big);
        VertexSet ys;
        for (std::size_t v = 0; v < n; ++v) {
          if (seen[v]) ys.push_back(static_cast<Vertex>(v));
        }
        ExpansionPartition part = modified_expansion(BipartiteView(g_, big, ys), r_);
        if (part.a1.empty()) {
          remove_constellation(Constellation{big, state_->members(Part::u_d), std::move(part.stars)});
          return true;
        }
        absorb(part.a1);
        log(StepType::move_expansion, 0, 0, &*state_);
      }
      state_->check_properties(g_, r_, d_);
    }
  }

  // D[v] for every v outside the packing, checked against |D[v]| <= r^d.
  void components_of_d(const VertexSet& packed) {
    const std::size_t n = g_.vertex_count();
    std::vector<char> in_s(n, 0);
    for (Vertex v : packed) in_s[static_cast<std::size_t>(v)] = 1;
    VertexSet d_vertices;
    for (std::size_t v = 0; v < n; ++v) {
      if (!in_s[v]) d_vertices.push_back(static_cast<Vertex>(v));
    }
    InducedSubgraph gd = induced_subgraph(g_, d_vertices);
    comp_of_.assign(n, -1);
    comps_.clear();
    const std::int64_t cap = saturating_pow(r_, d_);
    for (const auto& comp : components(gd.graph)) {
      if (static_cast<std::int64_t>(comp.size()) > cap) {
        throw ContractError("component of G[D] containing vertex " +
                            std::to_string(ids_[static_cast<std::size_t>(gd.original[static_cast<std::size_t>(comp.front())])]) +
                            " has " + std::to_string(comp.size()) + " vertices, more than r^d = " + std::to_string(cap) +
                            "; the graph has an induced path on d vertices");
      }
      VertexSet lifted;
      for (Vertex v : comp) {
        Vertex host = gd.original[static_cast<std::size_t>(v)];
        comp_of_[static_cast<std::size_t>(host)] = static_cast<int>(comps_.size());
        lifted.push_back(host);
      }
      comps_.push_back(std::move(lifted));
    }
  }

  std::optional<Vertex> low_degree_big_vertex() const {
    for (Vertex b : state_->members(Part::big)) {
      std::size_t into_u = 0;
      for (Vertex w : g_.neighbors(b)) into_u += state_->part(w) == Part::u_d ? 1 : 0;
      if (into_u < static_cast<std::size_t>(r_)) return b;
    }
    return std::nullopt;
  }

  // Moves `centers` from Big(S) to Small(S) and the D-components they touch
  // in U(D) to B(D).
  void absorb(const VertexSet& centers) {
    for (Vertex u : centers) state_->move(u, Part::small);
    for (Vertex u : centers) {
      for (Vertex w : g_.neighbors(u)) {
        if (state_->part(w) != Part::u_d) continue;
        for (Vertex x : comps_[static_cast<std::size_t>(comp_of_[static_cast<std::size_t>(w)])]) {
          state_->move(x, Part::b_d);
        }
      }
    }
  }

  void remove_constellation(const Constellation& con) {
    VertexSet kept;
    PackingInstance current{std::move(g_), k_, r_, d_};
    if (options_.on_constellation) options_.on_constellation(current, con);
    PackingInstance next = apply_constellation(current, con, &kept);
    const int k_delta = next.k - k_;
    const std::size_t removed = con.c.size() + con.l.size();
    g_ = std::move(next.g);
    k_ = next.k;
    ids_ = compose(ids_, kept);
    log(StepType::constellation, removed, k_delta, &*state_);
  }

  KernelResult finish() {
    const auto& st = *state_;
    const std::size_t s_size = st.count(Part::big) + st.count(Part::small);
    if (g_.vertex_count() != s_size + st.count(Part::u_d) + st.count(Part::b_d)) {
      throw ContractError("kernel accounting violated: |V| != |S| + |U(D)| + |B(D)|");
    }
    const std::int64_t cap = saturating_mul(saturating_pow(r_, d_ + 1), static_cast<std::int64_t>(st.count(Part::big)));
    if (static_cast<std::int64_t>(st.count(Part::u_d)) > cap) {
      throw ContractError("kernel accounting violated: |U(D)| = " + std::to_string(st.count(Part::u_d)) +
                          " exceeds r^(d+1)|Big(S)|");
    }
    log(StepType::terminate, 0, 0, &st);
    result_.out = PackingInstance{std::move(g_), k_, r_, d_};
    result_.outcome = KernelOutcome::kernel;
    result_.kept = std::move(ids_);
    return std::move(result_);
  }

  KernelResult trivial(bool yes, int k_out) {
    result_.out = PackingInstance{yes ? canonical_yes_graph(k_out, r_) : Graph(), k_out, r_, d_};
    result_.outcome = yes ? KernelOutcome::trivial_yes : KernelOutcome::trivial_no;
    result_.kept.clear();
    log(StepType::terminate, 0, 0, nullptr);
    return std::move(result_);
  }

  void log(StepType step, std::size_t removed, int k_delta, const KernelState* st) {
    TraceRecord rec{step, removed, k_delta, 0, 0, 0, 0};
    if (st) {
      rec.big = st->count(Part::big);
      rec.small = st->count(Part::small);
      rec.b_d = st->count(Part::b_d);
      rec.u_d = st->count(Part::u_d);
    }
    result_.trace.push_back(rec);
  }

  Graph g_;
  int k_;
  int r_;
  int d_;
  VertexSet ids_;
  std::optional<KernelState> state_;
  std::vector<int> comp_of_;
  std::vector<VertexSet> comps_;
  KernelResult result_;
  const KernelOptions& options_;
};

}  // namespace

KernelResult kernelize(const PackingInstance& inst, const KernelOptions& options) {
  inst.validate();
  if (options.verify_class) {
    if (auto path = find_induced_path(inst.g, inst.d)) {
      throw ContractError("input graph has an induced path on d = " + std::to_string(inst.d) + " vertices");
    }
  }
  KernelResult result = Kernelizer(inst, options).run();
  if (result.out.k >= 2 && inst.k >= 2 &&
      static_cast<std::int64_t>(result.out.g.vertex_count()) > kernel_vertex_bound(inst.k, inst.r, inst.d)) {
    throw ContractError("kernel exceeds the vertex bound (k-1)(r+1)(r^(d+1)+1)");
  }
  return result;
}

}  // namespace starpack
