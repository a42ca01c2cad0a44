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

#include "pdcover/cover.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "pdcover/error.hpp"

namespace pdcover {

Bounds ComputeBounds(const GraphStats& stats, const Epsilon& eps,
                     NumericMode mode) {
  const double log_inv = eps.LogInverse();
  const double a = static_cast<double>(stats.r) * log_inv;
  const double log_m = stats.m > 0 ? std::log(static_cast<double>(stats.m)) : 0.0;
  const double base = (1.0 + a) * (1.0 + log_m);
  const double factor = mode == NumericMode::kScaledInteger ? 2.0 : 1.0;
  Bounds b;
  b.rounds = factor * base;
  b.work = factor * (static_cast<double>(stats.m) +
                     static_cast<double>(stats.M) * log_inv);
  b.round_cap = 2.0 * base + a + 2.0;
  return b;
}

std::vector<VertexId> CoverResult::SortedCover() const {
  std::vector<VertexId> out = cover;
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

template <class Arith>
CoverResult RunOnGraph(const Hypergraph& run_graph, const Hypergraph& original,
                       const Epsilon& eps, const SolveOptions& options,
                       const BigInt& factor) {
  PackingState<Arith> state(run_graph, eps);
  CoverResult result;
  result.mode = Arith::kMode;
  result.eps = eps;
  result.stats = original.stats();
  result.bounds = ComputeBounds(result.stats, eps, Arith::kMode);
  result.scale_factor = factor;

  const RoundOptions round_options{options.workers,
                                   options.record_round_details};
  const double tolerance = Arith::kMode == NumericMode::kFloat64 ? 1e-9 : 0.0;
  while (!state.Converged()) {
    RoundReport report = state.Round(round_options);
    result.work += report.edges_at_start;
    result.touches += report.touches;
    result.reports.push_back(std::move(report));
    if (options.check_invariants) {
      const std::string violation = state.CheckInvariants(tolerance);
      if (!violation.empty()) {
        throw std::logic_error("round " + std::to_string(state.round()) +
                               ": " + violation);
      }
    }
    if (!state.Converged() &&
        static_cast<double>(state.round()) >= result.bounds.round_cap) {
      throw Error(ErrorCode::kRoundBoundExceeded,
                  std::to_string(state.round()) + " rounds, cap " +
                      std::to_string(result.bounds.round_cap));
    }
  }

  result.rounds = state.round();
  result.cover.assign(state.deleted().begin(), state.deleted().end());
  result.cover_weight = original.WeightOf(result.cover);
  result.packing.reserve(original.num_edges());
  const Rational scale(factor);
  for (EdgeId e = 0; e < original.num_edges(); ++e) {
    Rational value = state.arith().Exact(state.packing(e));
    if (factor != 1) value /= scale;
    result.packing_weight += value;
    result.packing.push_back(std::move(value));
  }
  return result;
}

}  // namespace

CoverResult RunCover(const Hypergraph& h, const Epsilon& eps, NumericMode mode,
                     const SolveOptions& options) {
  switch (mode) {
    case NumericMode::kFloat64:
      return RunOnGraph<Float64Arith>(h, h, eps, options, 1);
    case NumericMode::kRational:
      return RunOnGraph<RationalArith>(h, h, eps, options, 1);
    case NumericMode::kScaledInteger: {
      const ScaledWeights scaled = ScaleWeightsInteger(h, eps);
      return RunOnGraph<ScaledIntArith>(scaled.graph, h, eps, options,
                                        scaled.factor);
    }
  }
  throw std::logic_error("unknown numeric mode");
}

ScaledWeights ScaleWeightsInteger(const Hypergraph& h, const Epsilon& eps) {
  if (!h.has_integer_weights()) {
    throw Error(ErrorCode::kNonIntegerWeights,
                "scaling needs integer weights");
  }
  const std::size_t n = h.num_vertices();
  const std::size_t m = h.num_edges();
  ScaledWeights out;
  if (n == 0) {
    out.graph = h;
    return out;
  }

  BigInt min_w = numerator(h.weight(0));
  BigInt max_w = min_w;
  for (VertexId v = 1; v < n; ++v) {
    const BigInt w = numerator(h.weight(v));
    min_w = std::min(min_w, w);
    max_w = std::max(max_w, w);
  }
  // ceil(m / eps) = ceil(m * den / num)
  const BigInt num = numerator(eps.exact());
  const BigInt den = denominator(eps.exact());
  const BigInt target = (BigInt(m) * den + num - 1) / num;
  BigInt factor = (target + min_w - 1) / min_w;
  if (factor < 1) factor = 1;

  std::vector<Rational> weights;
  weights.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    weights.emplace_back(numerator(h.weight(v)) * factor);
  }
  std::vector<std::vector<VertexId>> edges(m);
  for (EdgeId e = 0; e < m; ++e) {
    const auto pins = h.pins(e);
    edges[e].assign(pins.begin(), pins.end());
  }
  out.graph = BuildHypergraph(std::move(weights), edges);
  out.factor = factor;
  out.input_bits = BitLength(max_w);
  const BigInt max_scaled = max_w * factor;
  out.output_bits = BitLength(max_scaled);
  out.bit_bound = 2.0 * out.input_bits + 3.0 +
                  (m > 0 ? std::log2(static_cast<double>(m)) : 0.0) +
                  std::log2(static_cast<double>(n));

  // The size bound needs eps >= 1 / (2 w(V)).
  if (eps.exact() * 2 * h.total_weight() >= 1) {
    const BigInt limit = (BigInt(1) << (2 * out.input_bits + 3)) *
                         BigInt(std::max<std::size_t>(m, 1)) * BigInt(n);
    if (max_scaled > limit) {
      throw std::logic_error("scaled weight exceeds 2^(2k+3) m n");
    }
  }
  return out;
}

double GoodVertexFraction(const Hypergraph& h, const RoundReport& report) {
  if (!report.has_details) {
    throw Error(ErrorCode::kInvalidInputs, "report has no orientation");
  }
  if (report.live_edges.empty()) return 1.0;
  std::unordered_map<VertexId, std::size_t> live_degree;
  std::unordered_map<VertexId, std::size_t> in_degree;
  for (std::size_t i = 0; i < report.live_edges.size(); ++i) {
    for (VertexId v : h.pins(report.live_edges[i])) ++live_degree[v];
    ++in_degree[report.limiter[i]];
  }
  std::size_t into_good = 0;
  for (const auto& [v, in] : in_degree) {
    if (3 * in > live_degree[v]) into_good += in;
  }
  return static_cast<double>(into_good) /
         static_cast<double>(report.live_edges.size());
}

}  // namespace pdcover
