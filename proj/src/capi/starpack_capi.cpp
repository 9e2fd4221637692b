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

#include "starpack/starpack.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "starpack/cograph.hpp"
#include "starpack/error.hpp"
#include "starpack/generators.hpp"
#include "starpack/graph_io.hpp"
#include "starpack/kernel.hpp"
#include "starpack/packing.hpp"
#include "starpack/reduction3dm.hpp"
#include "starpack/report.hpp"

struct sp_graph {
  starpack::Graph g;
};

struct sp_packing {
  starpack::StarPacking p;
};

struct sp_kernel {
  starpack::PackingInstance in;
  starpack::KernelResult result;
  std::string answer;
  double elapsed_ms = 0.0;
};

struct sp_3dm {
  starpack::ThreeDMInstance inst;
};

namespace {

thread_local std::string last_error;

// Errors raised by file helpers carry no subtype; tag them here.
struct IoError : starpack::Error {
  using starpack::Error::Error;
};

sp_status fail(sp_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
sp_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return SP_OK;
  } catch (const starpack::ParseError& e) {
    return fail(SP_ERR_PARSE, e.what());
  } catch (const starpack::InputError& e) {
    return fail(SP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const starpack::ContractError& e) {
    return fail(SP_ERR_CONTRACT, e.what());
  } catch (const starpack::LimitError& e) {
    return fail(SP_ERR_LIMIT, e.what());
  } catch (const IoError& e) {
    return fail(SP_ERR_IO, e.what());
  } catch (const starpack::Error& e) {
    return fail(SP_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SP_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw starpack::InputError(what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

std::string read_file(const char* path) {
  require(path != nullptr, "path is NULL");
  try {
    return starpack::read_text_file(path);
  } catch (const starpack::Error& e) {
    throw IoError(e.what());
  }
}

void write_file(const char* path, const std::string& text) {
  require(path != nullptr, "path is NULL");
  try {
    starpack::write_text_file(path, text);
  } catch (const starpack::Error& e) {
    throw IoError(e.what());
  }
}

std::vector<std::string> comments_of(const char* comment) {
  if (comment == nullptr || *comment == '\0') return {};
  return {comment};
}

sp_graph* wrap(starpack::Graph g) { return new sp_graph{std::move(g)}; }

char role_code(starpack::GadgetRole role) {
  using starpack::GadgetRole;
  switch (role) {
    case GadgetRole::v1: return '1';
    case GadgetRole::v2: return '2';
    case GadgetRole::v3: return '3';
    case GadgetRole::x1: return 'a';
    case GadgetRole::x2: return 'b';
    case GadgetRole::y: return 'y';
    case GadgetRole::w: return 'w';
  }
  return '?';
}

}  // namespace

extern "C" {

const char* sp_version(void) { return "0.1.0"; }

const char* sp_status_string(sp_status status) {
  switch (status) {
    case SP_OK: return "ok";
    case SP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SP_ERR_PARSE: return "parse error";
    case SP_ERR_IO: return "i/o error";
    case SP_ERR_CONTRACT: return "contract violation";
    case SP_ERR_LIMIT: return "size limit exceeded";
    case SP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* sp_last_error(void) { return last_error.c_str(); }

void sp_string_free(char* s) { std::free(s); }

sp_status sp_graph_create(size_t n, sp_graph** out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    *out = wrap(starpack::Graph(n));
  });
}

void sp_graph_free(sp_graph* g) { delete g; }

sp_status sp_graph_add_edge(sp_graph* g, int32_t u, int32_t v) {
  return guarded([&] {
    require(g != nullptr, "graph is NULL");
    g->g.add_edge(u, v);
  });
}

size_t sp_graph_vertex_count(const sp_graph* g) { return g ? g->g.vertex_count() : 0; }
size_t sp_graph_edge_count(const sp_graph* g) { return g ? g->g.edge_count() : 0; }

int sp_graph_has_edge(const sp_graph* g, int32_t u, int32_t v) {
  if (!g || !g->g.contains(u) || !g->g.contains(v)) return 0;
  return g->g.adjacent(u, v) ? 1 : 0;
}

size_t sp_graph_degree(const sp_graph* g, int32_t v) {
  if (!g || !g->g.contains(v)) return 0;
  return g->g.degree(v);
}

sp_status sp_graph_parse(const char* text, sp_graph** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "NULL argument");
    *out = wrap(starpack::parse_graph(text));
  });
}

sp_status sp_graph_read_file(const char* path, sp_graph** out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    *out = wrap(starpack::parse_graph(read_file(path)));
  });
}

sp_status sp_graph_format(const sp_graph* g, const char* comment, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "NULL argument");
    *out = dup_string(starpack::format_graph(g->g, comments_of(comment)));
  });
}

sp_status sp_graph_write_file(const sp_graph* g, const char* comment, const char* path) {
  return guarded([&] {
    require(g != nullptr, "graph is NULL");
    write_file(path, starpack::format_graph(g->g, comments_of(comment)));
  });
}

sp_status sp_graph_find_induced_path(const sp_graph* g, int d, int* found, int32_t* witness) {
  return guarded([&] {
    require(g != nullptr && found != nullptr, "NULL argument");
    auto path = starpack::find_induced_path(g->g, d);
    *found = path ? 1 : 0;
    if (path && witness) std::copy(path->begin(), path->end(), witness);
  });
}

sp_status sp_graph_is_cograph(const sp_graph* g, int* result) {
  return guarded([&] {
    require(g != nullptr && result != nullptr, "NULL argument");
    *result = starpack::is_cograph(g->g) ? 1 : 0;
  });
}

sp_status sp_graph_is_split(const sp_graph* g, int* result) {
  return guarded([&] {
    require(g != nullptr && result != nullptr, "NULL argument");
    *result = starpack::is_split(g->g) ? 1 : 0;
  });
}

sp_status sp_solve(const sp_graph* g, int r, sp_solve_mode mode, int allow_large, sp_packing** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "NULL argument");
    require(r >= 1, "r must be at least 1");
    starpack::StarPacking p;
    switch (mode) {
      case SP_SOLVE_COGRAPH:
        if (!starpack::is_cograph(g->g)) throw starpack::ContractError("input graph is not a cograph");
        p = starpack::solve_cograph(g->g, r).witness;
        break;
      case SP_SOLVE_ORACLE:
        if (!allow_large && g->g.vertex_count() > 24) {
          throw starpack::LimitError("oracle refuses " + std::to_string(g->g.vertex_count()) +
                                     " vertices (limit 24); override to force");
        }
        p = starpack::optimal_packing(g->g, r).witness;
        break;
      case SP_SOLVE_GREEDY:
        p = starpack::greedy_maximal_packing(g->g, r);
        break;
      default:
        throw starpack::InputError("unknown solve mode");
    }
    if (!starpack::validate_packing(g->g, p, r)) throw starpack::ContractError("solver produced an invalid packing");
    *out = new sp_packing{std::move(p)};
  });
}

void sp_packing_free(sp_packing* p) { delete p; }

size_t sp_packing_size(const sp_packing* p) { return p ? p->p.size() : 0; }

sp_status sp_packing_format(const sp_packing* p, char** out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "NULL argument");
    *out = dup_string(starpack::format_packing(p->p));
  });
}

sp_status sp_packing_validate(const sp_graph* g, const sp_packing* p, int r, int* valid) {
  return guarded([&] {
    require(g != nullptr && p != nullptr && valid != nullptr, "NULL argument");
    *valid = starpack::validate_packing(g->g, p->p, r) ? 1 : 0;
  });
}

sp_status sp_kernelize(const sp_graph* g, int k, int r, int d, unsigned flags, sp_kernel** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "NULL argument");
    starpack::PackingInstance in{g->g, k, r, d};
    starpack::KernelOptions options;
    options.verify_class = (flags & SP_KERNEL_VERIFY_CLASS) != 0;
    auto start = std::chrono::steady_clock::now();
    auto result = starpack::kernelize(in, options);
    std::string answer = starpack::decide_answer(result);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    *out = new sp_kernel{std::move(in), std::move(result), std::move(answer), ms};
  });
}

void sp_kernel_free(sp_kernel* kr) { delete kr; }

sp_status sp_kernel_graph(const sp_kernel* kr, sp_graph** out) {
  return guarded([&] {
    require(kr != nullptr && out != nullptr, "NULL argument");
    *out = wrap(kr->result.out.g);
  });
}

int sp_kernel_k(const sp_kernel* kr) { return kr ? kr->result.out.k : 0; }

sp_kernel_outcome sp_kernel_outcome_of(const sp_kernel* kr) {
  if (!kr) return SP_OUTCOME_KERNEL;
  switch (kr->result.outcome) {
    case starpack::KernelOutcome::trivial_yes: return SP_OUTCOME_TRIVIAL_YES;
    case starpack::KernelOutcome::trivial_no: return SP_OUTCOME_TRIVIAL_NO;
    case starpack::KernelOutcome::kernel: break;
  }
  return SP_OUTCOME_KERNEL;
}

sp_status sp_kernel_report(const sp_kernel* kr, const char* instance, const char* seed, char** out) {
  return guarded([&] {
    require(kr != nullptr && out != nullptr, "NULL argument");
    auto rec = starpack::make_record(instance ? instance : "-", kr->in, kr->result);
    rec.answer = kr->answer;
    if (seed && *seed) rec.seed = seed;
    rec.elapsed_ms = kr->elapsed_ms;
    *out = dup_string(starpack::format_kernel_report(kr->result, rec));
  });
}

int64_t sp_kernel_bound(int k, int r, int d) { return starpack::kernel_vertex_bound(k, r, d); }

sp_status sp_generate_cograph(size_t n, uint64_t seed, double join_probability, sp_graph** out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    *out = wrap(starpack::random_cograph(n, seed, join_probability));
  });
}

sp_status sp_generate_split(size_t n, uint64_t seed, size_t clique_size, double cross_probability, sp_graph** out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    *out = wrap(starpack::random_split(n, seed, clique_size, cross_probability));
  });
}

sp_status sp_generate_stars(size_t count, int r, double noise, uint64_t seed, sp_graph** out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    *out = wrap(starpack::disjoint_stars(count, r, noise, seed));
  });
}

sp_status sp_generate_gnp(size_t n, double p, uint64_t seed, sp_graph** out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    *out = wrap(starpack::random_gnp(n, p, seed));
  });
}

sp_status sp_generate_3dm(int k, size_t m, uint64_t seed, int planted, sp_3dm** out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    *out = new sp_3dm{starpack::random_3dm(k, m, seed, planted != 0)};
  });
}

void sp_3dm_free(sp_3dm* inst) { delete inst; }

sp_status sp_3dm_parse(const char* text, sp_3dm** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "NULL argument");
    *out = new sp_3dm{starpack::parse_3dm(text)};
  });
}

sp_status sp_3dm_read_file(const char* path, sp_3dm** out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    *out = new sp_3dm{starpack::parse_3dm(read_file(path))};
  });
}

sp_status sp_3dm_format(const sp_3dm* inst, const char* comment, char** out) {
  return guarded([&] {
    require(inst != nullptr && out != nullptr, "NULL argument");
    *out = dup_string(starpack::format_3dm(inst->inst, comments_of(comment)));
  });
}

int sp_3dm_k(const sp_3dm* inst) { return inst ? inst->inst.k : 0; }
size_t sp_3dm_triple_count(const sp_3dm* inst) { return inst ? inst->inst.m() : 0; }

sp_status sp_3dm_has_perfect_matching(const sp_3dm* inst, int* result) {
  return guarded([&] {
    require(inst != nullptr && result != nullptr, "NULL argument");
    *result = starpack::has_perfect_matching_3dm(inst->inst) ? 1 : 0;
  });
}

sp_status sp_reduce_3dm(const sp_3dm* inst, int r, sp_graph** out, char** roles) {
  return guarded([&] {
    require(inst != nullptr && out != nullptr, "NULL argument");
    auto gadget = starpack::reduce_3dm(inst->inst, r);
    std::string codes;
    for (auto role : gadget.roles) codes.push_back(role_code(role));
    char* role_out = roles ? dup_string(codes) : nullptr;
    *out = wrap(std::move(gadget.graph));
    if (roles) *roles = role_out;
  });
}

sp_status sp_has_perfect_star_partition(const sp_graph* g, int r, int* result) {
  return guarded([&] {
    require(g != nullptr && result != nullptr, "NULL argument");
    *result = starpack::has_perfect_star_partition(g->g, r) ? 1 : 0;
  });
}

sp_status sp_bench_run(const char* corpus_dir, int k_min, int k_max, int r, int d, unsigned jobs, char** out) {
  return guarded([&] {
    require(corpus_dir != nullptr && out != nullptr, "NULL argument");
    starpack::BenchOptions options{k_min, k_max, r, d, jobs};
    std::string report;
    try {
      report = starpack::run_bench(corpus_dir, options);
    } catch (const starpack::ParseError&) {
      throw;
    } catch (const starpack::InputError&) {
      throw;
    } catch (const starpack::Error& e) {
      throw IoError(e.what());
    }
    *out = dup_string(report);
  });
}

}  // extern "C"
