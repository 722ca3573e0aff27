// core/src/error.cpp

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

#include "minkowski/error.hpp"

#include <sstream>

namespace minkowski {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformedHeader: return "malformed header";
    case ParseErrorKind::kRowLengthMismatch: return "row length mismatch";
    case ParseErrorKind::kRowSumViolation: return "row sum violation";
    case ParseErrorKind::kNonNumericToken: return "non-numeric token";
    case ParseErrorKind::kValueOutOfRange: return "value out of range";
    case ParseErrorKind::kBadDocument: return "bad document";
  }
  return "parse error";
}

namespace {

std::string format_parse_error(ParseErrorKind kind, const std::string& file,
                               std::size_t line, const std::string& detail) {
  std::ostringstream msg;
  msg << file;
  if (line > 0) msg << ":" << line;
  msg << ": " << to_string(kind);
  if (!detail.empty()) msg << ": " << detail;
  return msg.str();
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::string file, std::size_t line,
                       const std::string& detail)
    : ValidationError(format_parse_error(kind, file, line, detail)),
      kind_(kind),
      file_(std::move(file)),
      line_(line) {}

}  // namespace minkowski
