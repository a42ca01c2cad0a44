// Copyright 2026 The pdcover Authors
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

#ifndef PDCOVER_ERROR_HPP_
#define PDCOVER_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pdcover {

enum class ErrorCode {
  kEmptyEdge,
  kUnknownVertex,
  kNonpositiveWeight,
  kDuplicateVertexInEdge,
  kUncoveredElement,
  kUnknownElement,
  kDuplicateElementInSet,
  kUnknownId,
  kEpsOutOfRange,
  kNonIntegerWeights,
  kNoLiveEdges,
  kRoundBoundExceeded,
  kNegativePackingValue,
  kInvalidInputs,
  kNotEpsMaximal,
  kEpsTooLarge,
  kTooLarge,
  kNumericOverflow,
  kInfeasibleParams,
  kSyntaxError,
  kSemanticError,
  kBoundViolated,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported with this exception. The code is the
// stable, machine-checkable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Instance-file errors carry the 1-based line they were detected on.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, const std::string& message)
      : Error(code, "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pdcover

#endif  // PDCOVER_ERROR_HPP_
