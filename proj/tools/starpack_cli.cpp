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

// starpack command-line tool. Talks to the library only through the C API.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "starpack/starpack.h"

namespace {

struct GraphDeleter {
  void operator()(sp_graph* g) const { sp_graph_free(g); }
};
struct PackingDeleter {
  void operator()(sp_packing* p) const { sp_packing_free(p); }
};
struct KernelDeleter {
  void operator()(sp_kernel* k) const { sp_kernel_free(k); }
};
struct ThreeDMDeleter {
  void operator()(sp_3dm* t) const { sp_3dm_free(t); }
};
struct StringDeleter {
  void operator()(char* s) const { sp_string_free(s); }
};

using GraphPtr = std::unique_ptr<sp_graph, GraphDeleter>;
using PackingPtr = std::unique_ptr<sp_packing, PackingDeleter>;
using KernelPtr = std::unique_ptr<sp_kernel, KernelDeleter>;
using ThreeDMPtr = std::unique_ptr<sp_3dm, ThreeDMDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Carries a library failure up to main.
struct Failure {
  sp_status status;
  std::string message;
};

void check(sp_status status, const std::string& context) {
  if (status != SP_OK) throw Failure{status, context + ": " + sp_last_error()};
}

std::string take(char* s) {
  StringPtr owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw Failure{SP_ERR_IO, "cannot write '" + path + "'"};
}

GraphPtr load_graph(const std::string& path) {
  sp_graph* g = nullptr;
  check(sp_graph_read_file(path.c_str(), &g), "reading '" + path + "'");
  return GraphPtr(g);
}

ThreeDMPtr load_3dm(const std::string& path) {
  sp_3dm* t = nullptr;
  check(sp_3dm_read_file(path.c_str(), &t), "reading '" + path + "'");
  return ThreeDMPtr(t);
}

std::string format_graph(const sp_graph* g, const std::string& comment) {
  char* text = nullptr;
  check(sp_graph_format(g, comment.empty() ? nullptr : comment.c_str(), &text), "formatting graph");
  return take(text);
}

// Value of a `seed=` token on the leading comment lines of a file.
std::string seed_comment(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] != 'c') break;
    auto pos = line.find(" seed=");
    if (pos == std::string::npos) continue;
    auto start = pos + 6;
    return line.substr(start, line.find_first_of(" \t\r", start) - start);
  }
  return {};
}

// "3" or "2..6".
std::pair<int, int> parse_k_range(const std::string& text) {
  auto number = [&](const std::string& part) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) {
      throw Failure{SP_ERR_INVALID_ARGUMENT, "bad k range '" + text + "' (expected N or A..B)"};
    }
    return value;
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int k = number(text);
    return {k, k};
  }
  return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

struct Options {
  std::string input;
  std::string output;
  std::string report;
  std::string k = "2";
  int r = 3;
  int d = 4;
  std::optional<int> d_given;
  std::uint64_t seed = 1;
  std::string mode = "cograph";
  unsigned jobs = 1;
  bool allow_large = false;
  bool verify = false;
  std::size_t n = 20;
  std::size_t m = 0;
  std::size_t count = 3;
  std::size_t clique = 0;
  double join_p = 0.5;
  double cross_p = 0.5;
  double noise = 0.0;
  bool planted = false;
  std::string family;
};

int cmd_kernelize(const Options& o) {
  auto g = load_graph(o.input);
  auto [k, k_hi] = parse_k_range(o.k);
  if (k != k_hi) throw Failure{SP_ERR_INVALID_ARGUMENT, "kernelize takes a single k"};
  sp_kernel* raw = nullptr;
  check(sp_kernelize(g.get(), k, o.r, o.d, o.verify ? SP_KERNEL_VERIFY_CLASS : SP_KERNEL_DEFAULT, &raw), "kernelize");
  KernelPtr kr(raw);
  sp_graph* out = nullptr;
  check(sp_kernel_graph(kr.get(), &out), "kernel graph");
  GraphPtr kg(out);
  emit(format_graph(kg.get(), "kernel k=" + std::to_string(sp_kernel_k(kr.get()))), o.output);
  if (!o.report.empty()) {
    char* text = nullptr;
    std::string id = std::filesystem::path(o.input).stem().string();
    std::string seed = seed_comment(o.input);
    check(sp_kernel_report(kr.get(), id.c_str(), seed.c_str(), &text), "report");
    emit(take(text), o.report);
  }
  return 0;
}

int cmd_solve(const Options& o) {
  auto g = load_graph(o.input);
  sp_solve_mode mode;
  if (o.mode == "cograph") {
    mode = SP_SOLVE_COGRAPH;
  } else if (o.mode == "oracle") {
    mode = SP_SOLVE_ORACLE;
  } else if (o.mode == "greedy") {
    mode = SP_SOLVE_GREEDY;
  } else {
    throw Failure{SP_ERR_INVALID_ARGUMENT, "unknown mode '" + o.mode + "'"};
  }
  sp_packing* raw = nullptr;
  check(sp_solve(g.get(), o.r, mode, o.allow_large ? 1 : 0, &raw), "solve");
  PackingPtr p(raw);
  char* text = nullptr;
  check(sp_packing_format(p.get(), &text), "formatting packing");
  emit("count " + std::to_string(sp_packing_size(p.get())) + "\n" + take(text), o.output);
  return 0;
}

int cmd_gen(const Options& o) {
  std::string seed = std::to_string(o.seed);
  if (o.family == "threedm") {
    sp_3dm* raw = nullptr;
    const int k = parse_k_range(o.k).first;
    const std::size_t m = o.m != 0 ? o.m : static_cast<std::size_t>(2 * k);
    check(sp_generate_3dm(k, m, o.seed, o.planted ? 1 : 0, &raw), "generating 3dm");
    ThreeDMPtr inst(raw);
    std::string comment = "family=threedm k=" + std::to_string(k) + " m=" + std::to_string(m) + " seed=" + seed;
    char* text = nullptr;
    check(sp_3dm_format(inst.get(), comment.c_str(), &text), "formatting 3dm");
    emit(take(text), o.output);
    return 0;
  }
  sp_graph* raw = nullptr;
  std::string comment;
  if (o.family == "cograph") {
    check(sp_generate_cograph(o.n, o.seed, o.join_p, &raw), "generating cograph");
    comment = "family=cograph n=" + std::to_string(o.n);
  } else if (o.family == "split") {
    check(sp_generate_split(o.n, o.seed, o.clique, o.cross_p, &raw), "generating split graph");
    comment = "family=split n=" + std::to_string(o.n);
  } else if (o.family == "stars") {
    // Leaf noise could create an induced P_d among the leaves; suppress it
    // when the requested class would not survive.
    double noise = o.noise;
    if (o.d_given && (*o.d_given <= 4 || *o.d_given <= o.r)) noise = 0.0;
    check(sp_generate_stars(o.count, o.r, noise, o.seed, &raw), "generating stars");
    comment = "family=stars count=" + std::to_string(o.count) + " r=" + std::to_string(o.r);
  } else if (o.family == "gnp") {
    check(sp_generate_gnp(o.n, o.cross_p, o.seed, &raw), "generating gnp");
    comment = "family=gnp n=" + std::to_string(o.n);
  } else {
    throw Failure{SP_ERR_INVALID_ARGUMENT, "unknown family '" + o.family + "'"};
  }
  GraphPtr g(raw);
  emit(format_graph(g.get(), comment + " seed=" + seed), o.output);
  return 0;
}

int cmd_reduce3dm(const Options& o) {
  auto inst = load_3dm(o.input);
  sp_graph* raw = nullptr;
  check(sp_reduce_3dm(inst.get(), o.r, &raw, nullptr), "reduce3dm");
  GraphPtr g(raw);
  std::string comment = "gadget k=" + std::to_string(sp_3dm_k(inst.get())) +
                        " m=" + std::to_string(sp_3dm_triple_count(inst.get())) + " r=" + std::to_string(o.r);
  emit(format_graph(g.get(), comment), o.output);
  return 0;
}

int cmd_check(const Options& o) {
  auto g = load_graph(o.input);
  int cograph = 0, split = 0;
  check(sp_graph_is_cograph(g.get(), &cograph), "cograph check");
  check(sp_graph_is_split(g.get(), &split), "split check");
  std::string line = "check n=" + std::to_string(sp_graph_vertex_count(g.get())) +
                     " m=" + std::to_string(sp_graph_edge_count(g.get())) +
                     " cograph=" + (cograph ? "true" : "false") + " split=" + (split ? "true" : "false");
  if (o.d_given) {
    const int d = *o.d_given;
    std::vector<int32_t> witness(static_cast<std::size_t>(std::max(d, 1)));
    int found = 0;
    check(sp_graph_find_induced_path(g.get(), d, &found, witness.data()), "induced path search");
    line += " d=" + std::to_string(d) + " pd_free=" + (found ? "false" : "true");
    if (found) {
      line += " path=";
      for (int i = 0; i < d; ++i) line += (i ? "," : "") + std::to_string(witness[static_cast<std::size_t>(i)] + 1);
    }
  }
  emit(line + "\n", o.output);
  return 0;
}

int cmd_bench(const Options& o) {
  auto [k_lo, k_hi] = parse_k_range(o.k);
  char* text = nullptr;
  check(sp_bench_run(o.input.c_str(), k_lo, k_hi, o.r, o.d, o.jobs, &text), "bench");
  emit(take(text), o.report.empty() ? o.output : o.report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"starpack: r-star packing kernelization for P_d-free graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sp_version()));
  Options o;
  int d = 4;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--r", o.r, "star arity r (K_{1,r})")->capture_default_str();
  };

  auto* kern = app.add_subcommand("kernelize", "kernelize a packing instance");
  kern->add_option("--input", o.input, "graph file")->required();
  kern->add_option("--k", o.k, "number of stars")->required();
  add_common(kern);
  kern->add_option("--d", d, "the input has no induced path on d vertices")->capture_default_str();
  kern->add_option("--output", o.output, "kernel graph file (default: stdout)");
  kern->add_option("--report", o.report, "trace and record report file");
  kern->add_flag("--verify", o.verify, "reject inputs containing an induced P_d");

  auto* solve = app.add_subcommand("solve", "maximum r-star packing");
  solve->add_option("--input", o.input, "graph file")->required();
  add_common(solve);
  solve->add_option("--mode", o.mode, "cograph | oracle | greedy")
      ->check(CLI::IsMember({"cograph", "oracle", "greedy"}))
      ->capture_default_str();
  solve->add_flag("--allow-large-oracle", o.allow_large, "lift the 24-vertex oracle guard");
  solve->add_option("--output", o.output, "output file (default: stdout)");

  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("family", o.family, "cograph | split | stars | gnp | threedm")
      ->required()
      ->check(CLI::IsMember({"cograph", "split", "stars", "gnp", "threedm"}));
  gen->add_option("--seed", o.seed, "random seed")->capture_default_str();
  gen->add_option("--n", o.n, "vertex count (cograph, split, gnp)")->capture_default_str();
  gen->add_option("--join-p", o.join_p, "join probability (cograph)")->capture_default_str();
  gen->add_option("--clique", o.clique, "clique size, 0 = random (split)")->capture_default_str();
  gen->add_option("--cross-p", o.cross_p, "cross/edge probability (split, gnp)")->capture_default_str();
  gen->add_option("--count", o.count, "number of stars (stars)")->capture_default_str();
  add_common(gen);
  gen->add_option("--noise", o.noise, "leaf-edge probability inside one star (stars)")->capture_default_str();
  auto* gen_d = gen->add_option("--d", d, "target class P_d-free; d <= 4 or d <= r disables star noise");
  gen->add_option("--k", o.k, "partite set size (threedm)");
  gen->add_option("--m", o.m, "triple count, default 2k (threedm)");
  gen->add_flag("--planted", o.planted, "plant a perfect matching (threedm)");
  gen->add_option("--output", o.output, "output file (default: stdout)");

  auto* red = app.add_subcommand("reduce3dm", "build the split-graph gadget of a 3DM instance");
  red->add_option("--input", o.input, "3DM file")->required();
  add_common(red);
  red->add_option("--output", o.output, "output file (default: stdout)");

  auto* chk = app.add_subcommand("check", "report cograph / split / P_d-free membership");
  chk->add_option("--input", o.input, "graph file")->required();
  auto* chk_d = chk->add_option("--d", d, "also search for an induced path on d vertices");
  chk->add_option("--output", o.output, "output file (default: stdout)");

  auto* bench = app.add_subcommand("bench", "kernelize a corpus of graph files");
  bench->add_option("--input", o.input, "corpus directory of *.graph files")->required();
  bench->add_option("--k", o.k, "k or range A..B")->capture_default_str();
  add_common(bench);
  bench->add_option("--d", d, "P_d-free class")->capture_default_str();
  bench->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
  bench->add_option("--report", o.report, "report file (default: stdout)");

  CLI11_PARSE(app, argc, argv);
  o.d = d;
  if ((gen->parsed() && gen_d->count() > 0) || (chk->parsed() && chk_d->count() > 0)) o.d_given = d;

  try {
    if (kern->parsed()) return cmd_kernelize(o);
    if (solve->parsed()) return cmd_solve(o);
    if (gen->parsed()) return cmd_gen(o);
    if (red->parsed()) return cmd_reduce3dm(o);
    if (chk->parsed()) return cmd_check(o);
    if (bench->parsed()) return cmd_bench(o);
  } catch (const Failure& f) {
    std::cerr << "starpack: " << f.message << " (" << sp_status_string(f.status) << ")\n";
    return 2;
  }
  return 1;
}
