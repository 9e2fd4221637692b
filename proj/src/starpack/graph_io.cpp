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

#include "starpack/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "starpack/error.hpp"

namespace starpack {
namespace {

// Splits text into lines and whitespace-separated tokens while tracking line
// numbers.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Advances to the next non-blank, non-comment line. Returns false at end.
  bool next(std::vector<std::string_view>& tokens) {
    while (pos_ < text_.size()) {
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_;
      tokenize(line, tokens);
      if (tokens.empty() || tokens[0] == "c") continue;
      return true;
    }
    return false;
  }

  std::size_t line() const { return line_; }

 private:
  static void tokenize(std::string_view line, std::vector<std::string_view>& tokens) {
    tokens.clear();
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) tokens.push_back(line.substr(i, j - i));
      i = j;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

long long to_integer(std::string_view token, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("expected an integer, got '" + std::string(token) + "'", line);
  }
  return value;
}

// 1-based index in [1, limit] -> 0-based.
int to_index(std::string_view token, long long limit, std::size_t line) {
  long long v = to_integer(token, line);
  if (v < 1 || v > limit) {
    throw ParseError("index " + std::to_string(v) + " out of range [1, " + std::to_string(limit) + "]", line);
  }
  return static_cast<int>(v - 1);
}

void expect_header(const std::vector<std::string_view>& tokens, std::string_view kind, std::size_t line) {
  if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != kind) {
    throw ParseError("expected header 'p " + std::string(kind) + " <a> <b>'", line);
  }
}

void write_comments(std::ostringstream& out, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "c " << c << '\n';
}

}  // namespace

Graph parse_graph(std::string_view text) {
  LineReader reader(text);
  std::vector<std::string_view> tok;
  if (!reader.next(tok)) throw ParseError("missing 'p star' header", 0);
  expect_header(tok, "star", reader.line());
  const long long n = to_integer(tok[2], reader.line());
  const long long m = to_integer(tok[3], reader.line());
  if (n < 0 || n > (1LL << 30)) throw ParseError("vertex count out of range", reader.line());
  if (m < 0 || m > n * (n - 1) / 2) throw ParseError("edge count out of range", reader.line());

  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (reader.next(tok)) {
    if (tok[0] != "e" || tok.size() != 3) throw ParseError("expected 'e <u> <v>'", reader.line());
    Vertex u = to_index(tok[1], n, reader.line());
    Vertex v = to_index(tok[2], n, reader.line());
    if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u + 1), reader.line());
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw ParseError("duplicate edge " + std::to_string(u + 1) + " " + std::to_string(v + 1), reader.line());
    }
    edges.emplace_back(u, v);
  }
  if (static_cast<long long>(seen.size()) != m) {
    throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(seen.size()), 0);
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

std::string format_graph(const Graph& g, const std::vector<std::string>& comments) {
  std::ostringstream out;
  write_comments(out, comments);
  out << "p star " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

ThreeDMInstance parse_3dm(std::string_view text) {
  LineReader reader(text);
  std::vector<std::string_view> tok;
  if (!reader.next(tok)) throw ParseError("missing 'p 3dm' header", 0);
  expect_header(tok, "3dm", reader.line());
  const long long k = to_integer(tok[2], reader.line());
  const long long m = to_integer(tok[3], reader.line());
  if (k < 1 || k > 1'000'000) throw ParseError("partite size k out of range", reader.line());
  if (m < 0) throw ParseError("negative triple count", reader.line());

  ThreeDMInstance inst{static_cast<int>(k), {}};
  std::set<Triple> seen;
  while (reader.next(tok)) {
    if (tok[0] != "t" || tok.size() != 4) throw ParseError("expected 't <i> <j> <l>'", reader.line());
    Triple t{to_index(tok[1], k, reader.line()), to_index(tok[2], k, reader.line()), to_index(tok[3], k, reader.line())};
    if (!seen.insert(t).second) throw ParseError("duplicate triple", reader.line());
    inst.triples.push_back(t);
  }
  if (static_cast<long long>(inst.triples.size()) != m) {
    throw ParseError("header announces " + std::to_string(m) + " triples, found " + std::to_string(inst.triples.size()), 0);
  }
  return inst;
}

std::string format_3dm(const ThreeDMInstance& inst, const std::vector<std::string>& comments) {
  std::ostringstream out;
  write_comments(out, comments);
  out << "p 3dm " << inst.k << ' ' << inst.m() << '\n';
  for (const auto& t : inst.triples) out << "t " << t.a + 1 << ' ' << t.b + 1 << ' ' << t.c + 1 << '\n';
  return out.str();
}

StarPacking parse_packing(std::string_view text, std::size_t n) {
  LineReader reader(text);
  std::vector<std::string_view> tok;
  StarPacking p;
  while (reader.next(tok)) {
    if (tok[0] != "s" || tok.size() < 2) throw ParseError("expected 's <center> <leaves...>'", reader.line());
    Star s;
    s.center = to_index(tok[1], static_cast<long long>(n), reader.line());
    for (std::size_t i = 2; i < tok.size(); ++i) s.leaves.push_back(to_index(tok[i], static_cast<long long>(n), reader.line()));
    std::vector<Vertex> all = s.leaves;
    all.push_back(s.center);
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) throw ParseError("repeated vertex in star", reader.line());
    p.stars.push_back(std::move(s));
  }
  return p;
}

std::string format_packing(const StarPacking& p) {
  std::ostringstream out;
  for (const auto& s : p.stars) {
    out << "s " << s.center + 1;
    for (Vertex l : s.leaves) out << ' ' << l + 1;
    out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error("error while reading '" + path.string() + "'");
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw Error("error while writing '" + path.string() + "'");
}

std::string comment_value(std::string_view text, std::string_view key) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.size() < 2 || line[0] != 'c' || (line[1] != ' ' && line[1] != '\t')) continue;
    std::size_t i = 1;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      std::string_view tok = line.substr(i, j - i);
      if (tok.size() > key.size() && tok.substr(0, key.size()) == key && tok[key.size()] == '=') {
        return std::string(tok.substr(key.size() + 1));
      }
      i = j;
    }
  }
  return {};
}

}  // namespace starpack
