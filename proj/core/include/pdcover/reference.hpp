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

#ifndef PDCOVER_REFERENCE_HPP_
#define PDCOVER_REFERENCE_HPP_

#include <cstdint>
#include <vector>

#include "pdcover/hypergraph.hpp"
#include "pdcover/numeric.hpp"

namespace pdcover {

inline constexpr std::size_t kMaxOracleVertices = 24;

struct OracleResult {
  std::vector<VertexId> opt_cover;  // ascending
  Rational opt_weight;
  std::uint64_t subsets_searched = 0;
};

// Exact minimum-weight cover by enumerating vertex subsets. Among optimal
// covers the lexicographically smallest ascending id list wins. Throws
// kTooLarge when n > 24.
OracleResult BruteForceMinCover(const Hypergraph& h);

struct BaselineResult {
  std::vector<VertexId> cover;  // tight vertices, ascending
  std::vector<Rational> packing;
  Rational cover_weight;
  Rational packing_weight;
};

// Sequential maximal packing: edges in ascending id, each raised to the
// smallest residual among its vertices. Returns the tight vertices as cover.
BaselineResult BarYehudaEven(const Hypergraph& h);

}  // namespace pdcover

#endif  // PDCOVER_REFERENCE_HPP_
