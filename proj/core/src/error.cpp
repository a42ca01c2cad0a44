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

#include "pdcover/error.hpp"

namespace pdcover {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyEdge: return "EmptyEdge";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kNonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::kDuplicateVertexInEdge: return "DuplicateVertexInEdge";
    case ErrorCode::kUncoveredElement: return "UncoveredElement";
    case ErrorCode::kUnknownElement: return "UnknownElement";
    case ErrorCode::kDuplicateElementInSet: return "DuplicateElementInSet";
    case ErrorCode::kUnknownId: return "UnknownId";
    case ErrorCode::kEpsOutOfRange: return "EpsOutOfRange";
    case ErrorCode::kNonIntegerWeights: return "NonIntegerWeights";
    case ErrorCode::kNoLiveEdges: return "NoLiveEdges";
    case ErrorCode::kRoundBoundExceeded: return "RoundBoundExceeded";
    case ErrorCode::kNegativePackingValue: return "NegativePackingValue";
    case ErrorCode::kInvalidInputs: return "InvalidInputs";
    case ErrorCode::kNotEpsMaximal: return "NotEpsMaximal";
    case ErrorCode::kEpsTooLarge: return "EpsTooLarge";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNumericOverflow: return "NumericOverflow";
    case ErrorCode::kInfeasibleParams: return "InfeasibleParams";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kSemanticError: return "SemanticError";
    case ErrorCode::kBoundViolated: return "BoundViolated";
  }
  return "Unknown";
}

}  // namespace pdcover
