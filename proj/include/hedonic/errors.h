// Copyright 2026 The Hedonic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HEDONIC_ERRORS_H_
#define HEDONIC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace hedonic {

// Semantically invalid input: bad labels, self-loops, overlapping blocks,
// utilities requested for a player outside the coalition, and so on.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed document text. Line and column are 1-based; 0 means unknown.
class SyntaxError : public InvalidInput {
 public:
  SyntaxError(const std::string& message, int line, int column)
      : InvalidInput(Format(message, line, column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string Format(const std::string& message, int line,
                            int column) {
    if (line <= 0) return message;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + message;
  }

  int line_;
  int column_;
};

// A request whose size exceeds an exhaustive-search cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation ran past its wall-clock budget.
class DeadlineExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hedonic

#endif  // HEDONIC_ERRORS_H_
