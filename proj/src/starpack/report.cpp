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

#include "starpack/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

#include "starpack/cograph.hpp"
#include "starpack/error.hpp"
#include "starpack/graph_io.hpp"
#include "starpack/packing.hpp"

namespace starpack {

bool BenchRecord::bound_ok() const {
  if (!error.empty() || k_in <= 1) return true;
  return static_cast<std::int64_t>(n_out) <= bound;
}

std::size_t BenchRecord::rule_applications() const { return simplify_removed + constellations; }

BenchRecord make_record(std::string instance, const PackingInstance& in, const KernelResult& result) {
  BenchRecord rec;
  rec.instance = std::move(instance);
  rec.n_in = in.g.vertex_count();
  rec.m_in = in.g.edge_count();
  rec.k_in = in.k;
  rec.r = in.r;
  rec.d = in.d;
  rec.n_out = result.out.g.vertex_count();
  rec.m_out = result.out.g.edge_count();
  rec.k_out = result.out.k;
  rec.outcome = result.outcome;
  rec.bound = kernel_vertex_bound(in.k, in.r, in.d);
  for (const auto& t : result.trace) {
    switch (t.step) {
      case StepType::simplify: rec.simplify_removed += t.vertices_removed; break;
      case StepType::constellation: ++rec.constellations; break;
      case StepType::move_expansion: ++rec.expansion_moves; break;
      case StepType::move_small_degree: ++rec.degree_moves; break;
      case StepType::terminate: break;
    }
  }
  return rec;
}

std::string decide_answer(const KernelResult& result, std::size_t oracle_limit) {
  switch (result.outcome) {
    case KernelOutcome::trivial_yes: return "yes";
    case KernelOutcome::trivial_no: return "no";
    case KernelOutcome::kernel: break;
  }
  const auto& out = result.out;
  int count = -1;
  if (out.g.vertex_count() <= oracle_limit) {
    count = optimal_packing(out.g, out.r).count;
  } else if (out.r >= 3 && is_cograph(out.g)) {
    count = solve_cograph(out.g, out.r).count;
  }
  if (count < 0) return "unknown";
  return count >= out.k ? "yes" : "no";
}

std::string format_trace(const std::vector<TraceRecord>& trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& t = trace[i];
    out << "trace index=" << i << " step=" << to_string(t.step) << " removed=" << t.vertices_removed
        << " k_delta=" << t.k_delta << " big=" << t.big << " small=" << t.small << " b_d=" << t.b_d
        << " u_d=" << t.u_d << '\n';
  }
  return out.str();
}

namespace {

// Keeps values free of whitespace and '='.
std::string sanitize(const std::string& s) {
  std::string out = s;
  for (char& c : out) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '=') c = '_';
  }
  return out.empty() ? "-" : out;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

std::string format_record(const BenchRecord& rec) {
  std::ostringstream out;
  out << "record instance=" << sanitize(rec.instance) << " n_in=" << rec.n_in << " m_in=" << rec.m_in
      << " k_in=" << rec.k_in << " r=" << rec.r << " d=" << rec.d;
  if (!rec.error.empty()) {
    out << " outcome=error error=" << sanitize(rec.error);
  } else {
    out << " n_out=" << rec.n_out << " m_out=" << rec.m_out << " k_out=" << rec.k_out
        << " outcome=" << to_string(rec.outcome) << " simplify_removed=" << rec.simplify_removed
        << " constellations=" << rec.constellations << " expansion_moves=" << rec.expansion_moves
        << " degree_moves=" << rec.degree_moves << " bound=" << rec.bound
        << " bound_ok=" << (rec.bound_ok() ? "true" : "false") << " answer=" << rec.answer;
  }
  out << " seed=" << sanitize(rec.seed) << " elapsed_ms=" << fixed(rec.elapsed_ms, 3) << '\n';
  return out.str();
}

std::string format_kernel_report(const KernelResult& result, const BenchRecord& rec) {
  return format_trace(result.trace) + format_record(rec);
}

std::string run_bench(const std::filesystem::path& corpus, const BenchOptions& options) {
  namespace fs = std::filesystem;
  if (options.k_min > options.k_max) throw InputError("empty k range");
  if (!fs::is_directory(corpus)) throw Error("corpus '" + corpus.string() + "' is not a directory");
  PackingInstance{Graph(), options.k_min, options.r, options.d}.validate();

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(corpus)) {
    if (entry.is_regular_file() && entry.path().extension() == ".graph") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) return {};

  struct Input {
    std::string id;
    std::string seed;
    Graph g;
  };
  std::vector<Input> inputs;
  for (const auto& f : files) {
    std::string text = read_text_file(f);
    Graph g;
    try {
      g = parse_graph(text);
    } catch (const ParseError& e) {
      throw ParseError(f.filename().string() + ": " + e.what(), 0);
    }
    std::string seed = comment_value(text, "seed");
    inputs.push_back({f.stem().string(), seed.empty() ? "none" : seed, std::move(g)});
  }

  const int ks = options.k_max - options.k_min + 1;
  const std::size_t tasks = inputs.size() * static_cast<std::size_t>(ks);
  std::vector<BenchRecord> records(tasks);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t t = next++; t < tasks; t = next++) {
      const Input& in = inputs[t / static_cast<std::size_t>(ks)];
      PackingInstance inst{in.g, options.k_min + static_cast<int>(t % static_cast<std::size_t>(ks)), options.r, options.d};
      auto start = std::chrono::steady_clock::now();
      BenchRecord rec;
      try {
        KernelResult res = kernelize(inst);
        rec = make_record(in.id, inst, res);
        rec.answer = decide_answer(res);
      } catch (const Error& e) {
        rec = BenchRecord{};
        rec.instance = in.id;
        rec.n_in = inst.g.vertex_count();
        rec.m_in = inst.g.edge_count();
        rec.k_in = inst.k;
        rec.r = inst.r;
        rec.d = inst.d;
        rec.error = e.what();
      }
      rec.seed = in.seed;
      rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      records[t] = std::move(rec);
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(tasks)));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::ostringstream out;
  double max_ratio = 0.0;
  std::size_t rules = 0, violations = 0, errors = 0;
  for (const auto& rec : records) {
    out << format_record(rec);
    if (!rec.error.empty()) {
      ++errors;
      continue;
    }
    rules += rec.rule_applications();
    if (!rec.bound_ok()) ++violations;
    if (rec.bound > 0) max_ratio = std::max(max_ratio, static_cast<double>(rec.n_out) / static_cast<double>(rec.bound));
  }
  out << "summary records=" << records.size() << " errors=" << errors << " max_ratio=" << fixed(max_ratio, 6)
      << " total_rule_applications=" << rules << " bound_violations=" << violations << '\n';
  return out.str();
}

std::string strip_timing(const std::string& report) {
  std::string out;
  out.reserve(report.size());
  std::size_t pos = 0;
  while (pos < report.size()) {
    std::size_t hit = report.find(" elapsed_ms=", pos);
    if (hit == std::string::npos) {
      out.append(report, pos, std::string::npos);
      break;
    }
    out.append(report, pos, hit - pos);
    pos = hit + 1;
    while (pos < report.size() && report[pos] != ' ' && report[pos] != '\n') ++pos;
  }
  return out;
}

}  // namespace starpack
