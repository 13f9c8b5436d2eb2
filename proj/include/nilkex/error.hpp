// Copyright 2026 The nilkex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NILKEX_ERROR_HPP_
#define NILKEX_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilkex {

enum class Errc {
  kParse,
  kInvalidArgument,
  kNonTriangular,
  kOutOfRange,
  kMismatch,
  kInvalidParameters,
  kIncompleteTranscript,
  kNotAPower,
  kNoSolution,
  kBudgetExhausted,
  kUnrecoverable,
  kInconsistentFiltration,
  kUnsupported,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::kParse: return "parse-error";
    case Errc::kInvalidArgument: return "invalid-argument";
    case Errc::kNonTriangular: return "non-triangular";
    case Errc::kOutOfRange: return "out-of-range";
    case Errc::kMismatch: return "mismatch";
    case Errc::kInvalidParameters: return "invalid-parameters";
    case Errc::kIncompleteTranscript: return "incomplete-transcript";
    case Errc::kNotAPower: return "not-a-power";
    case Errc::kNoSolution: return "no-solution";
    case Errc::kBudgetExhausted: return "budget-exhausted";
    case Errc::kUnrecoverable: return "unrecoverable";
    case Errc::kInconsistentFiltration: return "inconsistent-filtration";
    case Errc::kUnsupported: return "unsupported";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Syntax errors carry a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(Errc::kParse, "line " + std::to_string(line) + ", column " +
                                std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  ParseError(Errc code, std::size_t line, std::size_t column,
             const std::string& what)
      : Error(code, "line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace nilkex

#endif  // NILKEX_ERROR_HPP_
