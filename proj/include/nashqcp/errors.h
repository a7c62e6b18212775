// Copyright 2026 The nashqcp Authors.
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

#ifndef NASHQCP_ERRORS_H_
#define NASHQCP_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nashqcp {

// Malformed or inconsistent caller input (dimension mismatch, NaN payoff,
// bad index).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold, e.g. building a
// program from a game whose payoffs are not normalized.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Text input that could not be parsed. Line and column are 1-based.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " +
                   message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace nashqcp

#endif  // NASHQCP_ERRORS_H_
