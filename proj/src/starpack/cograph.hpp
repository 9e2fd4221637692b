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
#include <vector>

#include "starpack/graph.hpp"
#include "starpack/packing.hpp"

namespace starpack {

// Cographs are exactly the P4-free graphs. Recognized by recursive
// decomposition: every induced subgraph on two or more vertices must be
// disconnected or have a disconnected complement.
bool is_cograph(const Graph& g);

// Components of the complement ("co-components"), ordered by smallest vertex.
std::vector<VertexSet> co_components(const Graph& g);

// A partition of a connected cograph's vertices into two nonempty sides with
// every cross pair adjacent.
struct CoComponentSplit {
  VertexSet x_side;
  VertexSet y_side;
};

// Largest co-component (first on ties) against the union of the rest.
// Throws ContractError when g has fewer than two co-components.
CoComponentSplit co_component_split(const Graph& g);

// Sizes of the two sides of a connected cograph in Case 2 (x <= r*y and
// y <= r*x) with the floors and fractional parts of
//   a = (r*y - x) / (r^2 - 1),   b = (r*x - y) / (r^2 - 1).
// Fractional parts are kept as numerators over `denom` = r^2 - 1.
struct Case2Arithmetic {
  std::int64_t x = 0, y = 0, r = 0;
  std::int64_t denom = 0;
  std::int64_t a_floor = 0, b_floor = 0;
  std::int64_t eps_a_num = 0, eps_b_num = 0;
  // r*eps_a + eps_b and r*eps_b + eps_a; always integers.
  std::int64_t slack_y = 0, slack_x = 0;

  // Throws InputError outside Case 2 and ContractError if an identity fails:
  // a'r + b' + slack_y = y, b'r + a' + slack_x = x, slacks integral.
  static Case2Arithmetic compute(std::int64_t x, std::int64_t y, std::int64_t r);

  double a() const { return static_cast<double>(a_floor) + static_cast<double>(eps_a_num) / static_cast<double>(denom); }
  double b() const { return static_cast<double>(b_floor) + static_cast<double>(eps_b_num) / static_cast<double>(denom); }
};

struct ClosedNeighborhoodChoice {
  VertexSet set;       // min(s, n) vertices
  std::size_t value = 0;  // |N[set]|
};

// A set of s vertices maximizing |N[S]| in a cograph: per component C_i with
// maximum degree m_i, the first chosen vertex adds m_i + 1 and a second one
// (from the other side of the co-component split) adds |C_i| - m_i - 1; the
// optimum takes the s largest of these numbers. With `validate`, throws
// ContractError for a non-cograph.
ClosedNeighborhoodChoice max_closed_neighborhood(const Graph& g, std::size_t s, bool validate = false);

struct CographStats {
  std::size_t case1 = 0;
  std::size_t case2 = 0;           // Case 2 entries; slack integrality checked on each
  std::size_t case2_base_optimal = 0;
  std::size_t case2_plus_degree = 0;       // extra star via a high-degree vertex
  std::size_t case2_plus_neighborhood = 0;  // extra star via max closed neighborhood
};

struct CographSolution {
  int count = 0;
  StarPacking witness;
  CographStats stats;
};

struct CographOptions {
  bool validate = false;  // run is_cograph first
  // Called with the arithmetic of every Case 2 entry.
  std::function<void(const Case2Arithmetic&)> on_case2;
};

// Maximum number of vertex-disjoint r-stars in a cograph, with a witness, in
// polynomial time. Requires r >= 3 (InputError otherwise). A non-cograph is
// reported as ContractError when validation is on or when the recursion hits
// a connected piece whose complement is connected.
CographSolution solve_cograph(const Graph& g, int r, const CographOptions& options = {});

}  // namespace starpack
