// core/include/minkowski/error.hpp

// Copyright 2026  Minkowski decoding authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minkowski {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented invariant (bad order, bad probability, shape).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Iterative solver ran out of iterations. Carries the last iterate so
/// callers can report how far it got.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, double last_iterate, double residual)
      : Error(what), last_iterate_(last_iterate), residual_(residual) {}

  double last_iterate() const noexcept { return last_iterate_; }
  double residual() const noexcept { return residual_; }

 private:
  double last_iterate_;
  double residual_;
};

enum class ParseErrorKind {
  kMalformedHeader,
  kRowLengthMismatch,
  kRowSumViolation,
  kNonNumericToken,
  kValueOutOfRange,
  kBadDocument,
};

const char* to_string(ParseErrorKind kind);

/// Malformed text input. `line` is 1-based; 0 when the error is not tied to
/// a single line (e.g. a JSON document).
class ParseError : public ValidationError {
 public:
  ParseError(ParseErrorKind kind, std::string file, std::size_t line,
             const std::string& detail);

  ParseErrorKind kind() const noexcept { return kind_; }
  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::string file_;
  std::size_t line_;
};

}  // namespace minkowski
