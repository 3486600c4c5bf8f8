// Copyright 2026 The COVE Authors
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

namespace cove {

// Base of every error raised by the library. The CLI maps any Error to exit
// code 2 (data or numeric failure).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `line` is 1-based; 0 means "not tied to a line".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A parameter outside the documented domain of an operation.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// An iterative method failed to meet its tolerance within its budget.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Input data violates a structural precondition (disconnected graph,
// mismatched universes, a graph too small for the requested split, ...).
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace cove
