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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "starpack/graph.hpp"
#include "starpack/packing.hpp"
#include "starpack/reduction3dm.hpp"

namespace starpack {

// Text formats. Indices are 1-based on disk and 0-based in memory. Lines
// starting with `c` are comments; blank lines are ignored. Writers emit a
// canonical form, so write(parse(write(x))) == write(x) byte for byte.
//
//   graph:   p star <n> <m>      then m lines  e <u> <v>
//   3DM:     p 3dm <k> <m>       then m lines  t <i> <j> <l>
//   packing: one line per star   s <center> <leaf> ... <leaf>

// Parse failures throw ParseError with the offending line number.
Graph parse_graph(std::string_view text);
// Comment lines (without the leading "c ") are written before the header.
std::string format_graph(const Graph& g, const std::vector<std::string>& comments = {});

ThreeDMInstance parse_3dm(std::string_view text);
std::string format_3dm(const ThreeDMInstance& inst, const std::vector<std::string>& comments = {});

// Checks structure only (indices in range, no repeated vertex inside a line);
// use validate_packing for the star conditions.
StarPacking parse_packing(std::string_view text, std::size_t n);
std::string format_packing(const StarPacking& p);

// Whole-file helpers; I/O failures throw Error.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// Values of `key=value` tokens on comment lines, e.g. "c family=cograph seed=7".
// Returns the first match or an empty string.
std::string comment_value(std::string_view text, std::string_view key);

}  // namespace starpack
