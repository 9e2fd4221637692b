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
#include <stdexcept>
#include <string>

namespace starpack {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied argument violates a precondition (bad parameter,
// out-of-range vertex, overlapping sets, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// Malformed text in one of the file formats. `line()` is 1-based, 0 when the
// problem is not tied to a particular line.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : InputError(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// The input is well formed but breaks a semantic contract the algorithm relies
// on (graph not in the promised class, argument is not a constellation, ...),
// or an internal invariant check fired.
class ContractError : public Error {
 public:
  using Error::Error;
};

// A size guard refused to start an exponential computation.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace starpack
