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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "starpack/kernel.hpp"

namespace starpack {

// Structured-text reports: one record per line, a leading record type
// followed by `key=value` fields in a fixed order. Values never contain
// whitespace. Timing lives only in the trailing `elapsed_ms` field.

struct BenchRecord {
  std::string instance;
  std::size_t n_in = 0, m_in = 0;
  int k_in = 0;
  int r = 0, d = 0;
  std::size_t n_out = 0, m_out = 0;
  int k_out = 0;
  KernelOutcome outcome = KernelOutcome::kernel;
  std::size_t simplify_removed = 0;
  std::size_t constellations = 0;
  std::size_t expansion_moves = 0;
  std::size_t degree_moves = 0;
  std::int64_t bound = 0;
  // "yes", "no" or "unknown".
  std::string answer = "unknown";
  std::string seed = "none";
  // Non-empty when the instance was rejected; the size fields after n_in are
  // then meaningless.
  std::string error;
  double elapsed_ms = 0.0;

  // n_out <= bound, vacuous for k_in <= 1 or rejected instances.
  bool bound_ok() const;
  // Rule 1 vertex deletions plus Rule 2 applications.
  std::size_t rule_applications() const;
};

// Fills the counters of `rec` from a kernelization.
BenchRecord make_record(std::string instance, const PackingInstance& in, const KernelResult& result);

// Decides the kernel's answer when that is cheap: trivial outcomes, the exact
// oracle for at most `oracle_limit` vertices, and the cograph solver for
// cograph kernels with r >= 3. Otherwise "unknown".
std::string decide_answer(const KernelResult& result, std::size_t oracle_limit = 20);

std::string format_trace(const std::vector<TraceRecord>& trace);
std::string format_record(const BenchRecord& rec);

// Trace lines followed by the record line.
std::string format_kernel_report(const KernelResult& result, const BenchRecord& rec);

struct BenchOptions {
  int k_min = 2;
  int k_max = 2;
  int r = 3;
  int d = 4;
  unsigned jobs = 1;
};

// Kernelizes every `*.graph` file of `corpus` (sorted by file name) for each
// k in [k_min, k_max]. Records come out in (file, k) order whatever the
// number of worker threads, followed by one `summary` line. An empty corpus
// gives an empty report. Unreadable files throw.
std::string run_bench(const std::filesystem::path& corpus, const BenchOptions& options);

// Drops `elapsed_ms=` fields so reports from different runs compare equal.
std::string strip_timing(const std::string& report);

}  // namespace starpack
