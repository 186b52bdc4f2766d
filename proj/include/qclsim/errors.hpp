// Copyright 2026 The qclsim Authors
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

#ifndef QCLSIM_ERRORS_HPP_
#define QCLSIM_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qclsim {

// Operand shapes disagree (matrix dims, qubit counts).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A qubit or outcome index is outside its register.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A value fails a structural invariant: not hermitian, not PSD, not unit
// trace, not a projector, Kraus family not trace preserving, bad spectrum.
class InvariantError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A formula refers to an atom with no bound state.
class BindingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text input that does not follow a grammar. Line and column are 1-based;
// column 0 means "whole line".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) +
                           (column > 0 ? ", column " + std::to_string(column)
                                       : std::string()) +
                           ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace qclsim

#endif  // QCLSIM_ERRORS_HPP_
