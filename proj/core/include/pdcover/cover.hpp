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

#ifndef PDCOVER_COVER_HPP_
#define PDCOVER_COVER_HPP_

#include <cstddef>
#include <vector>

#include "pdcover/hypergraph.hpp"
#include "pdcover/numeric.hpp"
#include "pdcover/packing_state.hpp"

namespace pdcover {

struct SolveOptions {
  unsigned workers = 1;
  bool record_round_details = true;
  // Run PackingState::CheckInvariants after every round (slow; for tests).
  bool check_invariants = false;
};

// Round and work bounds for a run.
struct Bounds {
  // (1 + r ln(1/eps)) (1 + ln m), doubled in scaled-integer mode.
  double rounds = 0.0;
  // m + M ln(1/eps), doubled in scaled-integer mode.
  double work = 0.0;
  // Hard cap after which a run aborts with kRoundBoundExceeded.
  double round_cap = 0.0;
};

Bounds ComputeBounds(const GraphStats& stats, const Epsilon& eps,
                     NumericMode mode);

struct CoverResult {
  NumericMode mode = NumericMode::kRational;
  Epsilon eps{Rational(1, 10)};
  GraphStats stats;
  // C_p in admission order.
  std::vector<VertexId> cover;
  Rational cover_weight;
  // Final packing per edge, in the units of the input weights. Exact for
  // every mode: binary64 values convert to rationals without loss, and
  // scaled-integer values are divided back by the scale factor.
  std::vector<Rational> packing;
  Rational packing_weight;
  std::size_t rounds = 0;
  // Sum over rounds of the round-start live edge count.
  std::size_t work = 0;
  // Sum over rounds of the round-start edge-vertex touches.
  std::size_t touches = 0;
  std::vector<RoundReport> reports;
  BigInt scale_factor = 1;
  Bounds bounds;

  std::vector<VertexId> SortedCover() const;
};

// Runs rounds until no edge is live and returns the deleted vertices as the
// cover. Scaled-integer mode scales the weights internally (see
// ScaleWeightsInteger) and reports results in the original units. Throws
// kNonIntegerWeights (scaled mode), kRoundBoundExceeded, kNumericOverflow.
CoverResult RunCover(const Hypergraph& h, const Epsilon& eps, NumericMode mode,
                     const SolveOptions& options = {});

struct ScaledWeights {
  Hypergraph graph;
  BigInt factor = 1;
  unsigned input_bits = 0;   // k: bit length of the largest input weight
  unsigned output_bits = 0;  // bit length of the largest scaled weight
  // 2k + 3 + log2 m + log2 n
  double bit_bound = 0.0;
};

// Multiplies all weights by ceil(ceil(m/eps) / min w) so the smallest is at
// least m/eps. When eps >= 1/(2 w(V)) the largest scaled weight is checked
// against 2^(2k+3) m n and a std::logic_error is thrown if it is exceeded.
// Throws kNonIntegerWeights.
ScaledWeights ScaleWeightsInteger(const Hypergraph& h, const Epsilon& eps);

// Recomputes the good-edge fraction of a detailed report from its
// orientation alone: each round-start live edge points at its limiter, a
// vertex is good when more than a third of its live edges point at it, and
// the result is (edges into good vertices) / (live edges).
double GoodVertexFraction(const Hypergraph& h, const RoundReport& report);

}  // namespace pdcover

#endif  // PDCOVER_COVER_HPP_
