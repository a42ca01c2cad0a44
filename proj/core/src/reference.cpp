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

#include "pdcover/reference.hpp"

#include <bit>
#include <limits>
#include <string>

#include "pdcover/error.hpp"

namespace pdcover {

namespace {

using Mask = std::uint32_t;

// True when the ascending id list of `a` sorts before that of `b`.
bool LexLess(Mask a, Mask b) {
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  const int j = std::countr_zero(diff);
  const Mask above = ~((Mask{2} << j) - 1);
  // The set holding j continues with j; the other continues with something
  // larger, or ends and is then a prefix.
  if (a & (Mask{1} << j)) return (b & above) != 0;
  return (a & above) == 0;
}

template <class W>
OracleResult Enumerate(const Hypergraph& h, const std::vector<W>& weight) {
  const std::size_t n = h.num_vertices();
  std::vector<Mask> edges;
  edges.reserve(h.num_edges());
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    Mask mask = 0;
    for (VertexId v : h.pins(e)) mask |= Mask{1} << v;
    edges.push_back(mask);
  }

  // All vertices is always a cover.
  const Mask all = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
  Mask best = all;
  W best_weight{};
  for (std::size_t v = 0; v < n; ++v) best_weight += weight[v];

  OracleResult result;
  for (std::uint64_t s = 0; s <= all; ++s) {
    const auto subset = static_cast<Mask>(s);
    ++result.subsets_searched;
    W w{};
    for (Mask bits = subset; bits != 0; bits &= bits - 1) {
      w += weight[std::countr_zero(bits)];
    }
    if (w > best_weight) continue;
    if (w == best_weight && !LexLess(subset, best)) continue;
    bool covers = true;
    for (Mask e : edges) {
      if ((e & subset) == 0) {
        covers = false;
        break;
      }
    }
    if (!covers) continue;
    best = subset;
    best_weight = w;
  }
  for (Mask bits = best; bits != 0; bits &= bits - 1) {
    result.opt_cover.push_back(static_cast<VertexId>(std::countr_zero(bits)));
  }
  result.opt_weight = h.WeightOf(result.opt_cover);
  return result;
}

}  // namespace

OracleResult BruteForceMinCover(const Hypergraph& h) {
  if (h.num_vertices() > kMaxOracleVertices) {
    throw Error(ErrorCode::kTooLarge,
                "n = " + std::to_string(h.num_vertices()) + " > " +
                    std::to_string(kMaxOracleVertices));
  }
  // Fast path: scale to a common denominator and compare in int64 when the
  // total fits comfortably.
  BigInt common = 1;
  for (const Rational& w : h.weights()) common = lcm(common, denominator(w));
  const BigInt total = numerator(Rational(h.total_weight() * common));
  if (BitLength(total) <= 62) {
    std::vector<std::int64_t> scaled;
    scaled.reserve(h.num_vertices());
    for (const Rational& w : h.weights()) {
      scaled.push_back(
          static_cast<std::int64_t>(numerator(Rational(w * common))));
    }
    return Enumerate(h, scaled);
  }
  std::vector<Rational> exact(h.weights().begin(), h.weights().end());
  return Enumerate(h, exact);
}

BaselineResult BarYehudaEven(const Hypergraph& h) {
  std::vector<Rational> residual(h.weights().begin(), h.weights().end());
  BaselineResult result;
  result.packing.assign(h.num_edges(), Rational(0));
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const auto pins = h.pins(e);
    Rational raise = residual[pins[0]];
    for (VertexId v : pins) raise = std::min(raise, residual[v]);
    for (VertexId v : pins) residual[v] -= raise;
    result.packing[e] = raise;
    result.packing_weight += raise;
  }
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (residual[v] == 0) result.cover.push_back(v);
  }
  result.cover_weight = h.WeightOf(result.cover);
  return result;
}

}  // namespace pdcover
