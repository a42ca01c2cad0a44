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

#ifndef PDCOVER_PACKING_STATE_HPP_
#define PDCOVER_PACKING_STATE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pdcover/error.hpp"
#include "pdcover/hypergraph.hpp"
#include "pdcover/numeric.hpp"
#include "pdcover/parallel.hpp"

namespace pdcover {

// What happened in one synchronous round. The per-edge and per-vertex
// vectors are only filled when details were requested.
struct RoundReport {
  std::size_t round = 0;  // 1-based
  std::size_t edges_at_start = 0;
  std::size_t edges_at_end = 0;
  // Edge-vertex touches: sum of |e| over the round-start live edges.
  std::size_t touches = 0;
  double phi_before = 0.0;
  double phi_after = 0.0;
  // Fraction of round-start live edges whose limiting vertex is good, i.e.
  // limits more than a third of its live edges.
  double good_edge_fraction = 0.0;
  // Smallest relative distance |w_p(v) - eps w(v)| / (eps w(v)) over the
  // deletion tests of this round.
  double threshold_margin = std::numeric_limits<double>::infinity();
  std::vector<VertexId> deleted_this_round;

  bool has_details = false;
  std::vector<EdgeId> live_edges;  // round-start E_p, ascending
  std::vector<double> delta;       // aligned with live_edges
  std::vector<VertexId> limiter;   // aligned with live_edges
  std::vector<std::pair<VertexId, std::uint32_t>> limited_counts;  // L(v) > 0
};

struct RoundOptions {
  unsigned workers = 1;
  bool record_details = true;
};

// Arithmetic policies for the round engine. Each supplies the value type of
// residual weights and packing values, the per-edge share w_p(v)/d_p(v), and
// the deletion test w_p(v) <= eps w(v).

class Float64Arith {
 public:
  using Value = double;
  using Threshold = double;
  static constexpr NumericMode kMode = NumericMode::kFloat64;

  explicit Float64Arith(const Epsilon& eps) : eps_(eps.value()) {}

  Value Weight(const Hypergraph& h, VertexId v) const {
    return h.weights_f64()[v];
  }
  Threshold MakeThreshold(const Value& w) const { return eps_ * w; }
  Value Share(const Value& residual, std::size_t degree) const {
    return residual / static_cast<double>(degree);
  }
  bool AtOrBelow(const Value& residual, const Threshold& t) const {
    return residual <= t;
  }
  double LogRatio(const Value& residual, const Threshold& t) const {
    return std::log(residual / t);
  }
  double Margin(const Value& residual, const Threshold& t) const {
    return std::abs(residual - t) / t;
  }
  Rational Exact(const Value& v) const { return Rational(v); }
  double Approx(const Value& v) const { return v; }

 private:
  double eps_;
};

class RationalArith {
 public:
  using Value = Rational;
  using Threshold = Rational;
  static constexpr NumericMode kMode = NumericMode::kRational;

  explicit RationalArith(const Epsilon& eps) : eps_(eps.exact()) {}

  Value Weight(const Hypergraph& h, VertexId v) const { return h.weight(v); }
  Threshold MakeThreshold(const Value& w) const { return eps_ * w; }
  Value Share(const Value& residual, std::size_t degree) const {
    return residual / Rational(degree);
  }
  bool AtOrBelow(const Value& residual, const Threshold& t) const {
    return residual <= t;
  }
  double LogRatio(const Value& residual, const Threshold& t) const {
    return std::log(ToDouble(Rational(residual / t)));
  }
  double Margin(const Value& residual, const Threshold& t) const {
    return std::abs(ToDouble(Rational((residual - t) / t)));
  }
  Rational Exact(const Value& v) const { return v; }
  double Approx(const Value& v) const { return ToDouble(v); }

 private:
  Rational eps_;
};

// Integer-only arithmetic on pre-scaled weights. The deletion test
// w_p <= eps w is evaluated as w_p * den(eps) <= num(eps) * w.
class ScaledIntArith {
 public:
  using Value = ScaledInt;
  using Threshold = ScaledInt;  // num(eps) * w
  static constexpr NumericMode kMode = NumericMode::kScaledInteger;

  explicit ScaledIntArith(const Epsilon& eps)
      : num_(ScaledInt::FromBigInt(numerator(eps.exact()))),
        den_(ScaledInt::FromBigInt(denominator(eps.exact()))) {}

  Value Weight(const Hypergraph& h, VertexId v) const {
    return ScaledInt::FromBigInt(numerator(h.weight(v)));
  }
  Threshold MakeThreshold(const Value& w) const { return num_ * w; }
  Value Share(const Value& residual, std::size_t degree) const {
    return FloorDiv(residual, static_cast<std::int64_t>(degree));
  }
  bool AtOrBelow(const Value& residual, const Threshold& t) const {
    return residual * den_ <= t;
  }
  double LogRatio(const Value& residual, const Threshold& t) const {
    return std::log(residual.ToDouble() * den_.ToDouble() / t.ToDouble());
  }
  double Margin(const Value& residual, const Threshold& t) const {
    return std::abs((residual * den_ - t).ToDouble()) / t.ToDouble();
  }
  Rational Exact(const Value& v) const { return Rational(v.ToBigInt()); }
  double Approx(const Value& v) const { return v.ToDouble(); }

 private:
  ScaledInt num_;
  ScaledInt den_;
};

// Mutable state of the synchronous packing rounds on one hypergraph. Each
// round raises every live edge e by min over v in e of w_p(v)/d_p(v), using
// the round-start (w_p, d_p) for all edges, then deletes every vertex whose
// residual dropped to eps w(v) or below together with its edges.
//
// The hypergraph must outlive the state.
template <class Arith>
class PackingState {
 public:
  using Value = typename Arith::Value;

  // Range checks on eps live in Epsilon. In scaled-integer mode throws
  // kNonIntegerWeights for fractional weights and kInvalidInputs when the
  // smallest weight is below ceil(m / eps).
  PackingState(const Hypergraph& h, const Epsilon& eps);

  // One round. Throws kNoLiveEdges once converged.
  RoundReport Round(const RoundOptions& options = {});

  // phi_p = sum_v d_p(v) ln(w_p(v) / (eps w(v))), in binary64.
  double Potential() const;

  bool Converged() const { return live_edges_.empty(); }
  std::size_t round() const { return round_; }
  const Epsilon& eps() const { return eps_; }
  const Hypergraph& graph() const { return *h_; }
  const Arith& arith() const { return arith_; }

  const Value& weight(VertexId v) const { return weight_[v]; }
  const Value& residual(VertexId v) const { return residual_[v]; }
  std::size_t residual_degree(VertexId v) const { return live_degree_[v]; }
  bool is_deleted(VertexId v) const { return vertex_deleted_[v] != 0; }
  bool is_live_edge(EdgeId e) const { return edge_live_[e] != 0; }
  const Value& packing(EdgeId e) const { return packing_[e]; }
  std::span<const Value> packing() const { return packing_; }
  std::span<const EdgeId> live_edges() const { return live_edges_; }
  // C_p in admission order (by round, then ascending id).
  std::span<const VertexId> deleted() const { return deleted_; }

  // Recomputes every state invariant from scratch. Returns an empty string
  // when all hold, otherwise a description of the first violation.
  // `tolerance` is the relative slack for residual bookkeeping (0 in exact
  // modes).
  std::string CheckInvariants(double tolerance = 0.0) const;

 private:
  const Hypergraph* h_;
  Epsilon eps_;
  Arith arith_;
  std::vector<Value> weight_;
  std::vector<typename Arith::Threshold> threshold_;
  std::vector<Value> residual_;
  std::vector<Value> packing_;
  std::vector<std::size_t> live_degree_;
  // Copy of the incidence CSR; the live edges of v occupy the first
  // live_degree_[v] slots of its range, ascending.
  std::vector<EdgeId> live_incidence_;
  std::vector<EdgeId> live_edges_;
  std::vector<char> edge_live_;
  std::vector<char> vertex_deleted_;
  // Vertices that are not deleted and still have live edges, ascending.
  std::vector<VertexId> active_;
  std::vector<VertexId> deleted_;
  std::size_t round_ = 0;

  // Per-round scratch, indexed by edge or vertex id.
  std::vector<Value> delta_;
  std::vector<VertexId> limiter_;
  std::vector<std::uint32_t> limited_;
};

// ---------------------------------------------------------------------------

template <class Arith>
PackingState<Arith>::PackingState(const Hypergraph& h, const Epsilon& eps)
    : h_(&h), eps_(eps), arith_([&]() -> Arith {
        if constexpr (Arith::kMode == NumericMode::kScaledInteger) {
          if (!h.has_integer_weights()) {
            throw Error(ErrorCode::kNonIntegerWeights,
                        "scaled-integer mode needs integer weights");
          }
        }
        return Arith(eps);
      }()) {
  const std::size_t n = h.num_vertices();
  const std::size_t m = h.num_edges();
  if constexpr (Arith::kMode == NumericMode::kScaledInteger) {
    const Rational floor_needed = Rational(m) / eps.exact();
    for (VertexId v = 0; v < n; ++v) {
      if (h.degree(v) > 0 && h.weight(v) < floor_needed) {
        throw Error(ErrorCode::kInvalidInputs,
                    "weights are not scaled: w(" + std::to_string(v) +
                        ") < m/eps");
      }
    }
  }
  weight_.reserve(n);
  threshold_.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    weight_.push_back(arith_.Weight(h, v));
    threshold_.push_back(arith_.MakeThreshold(weight_.back()));
  }
  residual_ = weight_;
  packing_.assign(m, Value{});
  live_degree_.resize(n);
  for (VertexId v = 0; v < n; ++v) live_degree_[v] = h.degree(v);
  live_incidence_.assign(h.incidence().begin(), h.incidence().end());
  live_edges_.resize(m);
  for (EdgeId e = 0; e < m; ++e) live_edges_[e] = e;
  edge_live_.assign(m, 1);
  vertex_deleted_.assign(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (live_degree_[v] > 0) active_.push_back(v);
  }
  delta_.assign(m, Value{});
  limiter_.assign(m, 0);
  limited_.assign(n, 0);
}

template <class Arith>
double PackingState<Arith>::Potential() const {
  double phi = 0.0;
  for (VertexId v : active_) {
    phi += static_cast<double>(live_degree_[v]) *
           arith_.LogRatio(residual_[v], threshold_[v]);
  }
  return phi;
}

template <class Arith>
RoundReport PackingState<Arith>::Round(const RoundOptions& options) {
  if (live_edges_.empty()) {
    throw Error(ErrorCode::kNoLiveEdges, "packing already converged");
  }
  const Hypergraph& h = *h_;
  const auto offsets = h.vertex_offsets();
  const unsigned workers = options.workers;

  RoundReport report;
  report.round = round_ + 1;
  report.edges_at_start = live_edges_.size();
  report.phi_before = Potential();

  if constexpr (Arith::kMode == NumericMode::kScaledInteger) {
    // While v is live w_p(v) >= m, so every floored share is at least 1 and
    // at least half of the unfloored one.
    const ScaledInt m(static_cast<std::int64_t>(h.num_edges()));
    for (VertexId v : active_) {
      if (residual_[v] < m) {
        throw std::logic_error("live residual fell below m in scaled mode");
      }
    }
  }

  // delta(e) from the round-start snapshot; the limiter is the minimizing
  // vertex with the lowest id.
  ParallelFor(live_edges_.size(), workers, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const EdgeId e = live_edges_[i];
      const auto pins = h.pins(e);
      VertexId best_v = pins[0];
      Value best = arith_.Share(residual_[best_v], live_degree_[best_v]);
      for (std::size_t k = 1; k < pins.size(); ++k) {
        const VertexId v = pins[k];
        Value share = arith_.Share(residual_[v], live_degree_[v]);
        if (share < best || (share == best && v < best_v)) {
          best = std::move(share);
          best_v = v;
        }
      }
      delta_[e] = std::move(best);
      limiter_[e] = best_v;
    }
  });

  // Per-vertex aggregation in ascending edge id, then the deletion test.
  std::vector<char> drop(active_.size(), 0);
  std::vector<double> margin(active_.size(), 0.0);
  ParallelFor(active_.size(), workers, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const VertexId v = active_[i];
      const std::size_t begin = offsets[v];
      const std::size_t end = begin + live_degree_[v];
      Value total{};
      std::uint32_t limited = 0;
      for (std::size_t k = begin; k < end; ++k) {
        const EdgeId e = live_incidence_[k];
        total += delta_[e];
        if (limiter_[e] == v) ++limited;
      }
      residual_[v] -= total;
      limited_[v] = limited;
      drop[i] = arith_.AtOrBelow(residual_[v], threshold_[v]) ? 1 : 0;
      margin[i] = arith_.Margin(residual_[v], threshold_[v]);
    }
  });

  if constexpr (Arith::kMode == NumericMode::kScaledInteger) {
    for (std::size_t i = 0; i < live_edges_.size(); ++i) {
      if (delta_[live_edges_[i]] < ScaledInt(1)) {
        throw std::logic_error("scaled-integer share fell below 1");
      }
    }
  }

  std::size_t good_edges = 0;
  for (std::size_t i = 0; i < active_.size(); ++i) {
    const VertexId v = active_[i];
    report.threshold_margin = std::min(report.threshold_margin, margin[i]);
    if (3 * static_cast<std::size_t>(limited_[v]) > live_degree_[v]) {
      good_edges += limited_[v];
    }
    if (drop[i]) {
      vertex_deleted_[v] = 1;
      deleted_.push_back(v);
      report.deleted_this_round.push_back(v);
    }
  }
  report.good_edge_fraction = static_cast<double>(good_edges) /
                              static_cast<double>(live_edges_.size());

  if (options.record_details) {
    report.has_details = true;
    report.live_edges = live_edges_;
    report.delta.reserve(live_edges_.size());
    report.limiter.reserve(live_edges_.size());
    for (EdgeId e : live_edges_) {
      report.delta.push_back(arith_.Approx(delta_[e]));
      report.limiter.push_back(limiter_[e]);
    }
    for (VertexId v : active_) {
      if (limited_[v] > 0) report.limited_counts.emplace_back(v, limited_[v]);
    }
  }

  // Commit the raise and drop edges that lost a vertex.
  std::vector<char> survives(live_edges_.size(), 0);
  ParallelFor(live_edges_.size(), workers, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const EdgeId e = live_edges_[i];
      packing_[e] += delta_[e];
      bool alive = true;
      for (VertexId v : h.pins(e)) {
        if (vertex_deleted_[v]) {
          alive = false;
          break;
        }
      }
      survives[i] = alive ? 1 : 0;
    }
  });
  std::size_t kept = 0;
  for (std::size_t i = 0; i < live_edges_.size(); ++i) {
    const EdgeId e = live_edges_[i];
    report.touches += h.edge_size(e);
    if (survives[i]) {
      live_edges_[kept++] = e;
    } else {
      edge_live_[e] = 0;
    }
  }
  live_edges_.resize(kept);

  ParallelFor(active_.size(), workers, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const VertexId v = active_[i];
      if (vertex_deleted_[v]) {
        live_degree_[v] = 0;
        continue;
      }
      const std::size_t begin = offsets[v];
      const std::size_t end = begin + live_degree_[v];
      std::size_t out = begin;
      for (std::size_t k = begin; k < end; ++k) {
        const EdgeId e = live_incidence_[k];
        if (edge_live_[e]) live_incidence_[out++] = e;
      }
      live_degree_[v] = out - begin;
    }
  });
  std::erase_if(active_, [&](VertexId v) { return live_degree_[v] == 0; });

  ++round_;
  report.edges_at_end = live_edges_.size();
  report.phi_after = Potential();
  return report;
}

template <class Arith>
std::string PackingState<Arith>::CheckInvariants(double tolerance) const {
  const Hypergraph& h = *h_;
  const std::size_t n = h.num_vertices();
  const std::size_t m = h.num_edges();
  for (EdgeId e = 0; e < m; ++e) {
    if (!edge_live_[e]) continue;
    for (VertexId v : h.pins(e)) {
      if (vertex_deleted_[v]) {
        return "live edge " + std::to_string(e) + " has deleted vertex " +
               std::to_string(v);
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    std::size_t d = 0;
    Value charged{};
    for (EdgeId e : h.incident_edges(v)) {
      if (edge_live_[e]) ++d;
      charged += packing_[e];
    }
    const std::string tag = "vertex " + std::to_string(v) + ": ";
    if (d != live_degree_[v]) return tag + "residual degree mismatch";
    if (vertex_deleted_[v] && d != 0) return tag + "deleted with live edges";
    if (charged > weight_[v]) {
      const double over = arith_.Approx(charged) - arith_.Approx(weight_[v]);
      if (tolerance == 0.0 || over > tolerance * arith_.Approx(weight_[v])) {
        return tag + "packing exceeds weight";
      }
    }
    const Value expect = weight_[v] - charged;
    if (tolerance == 0.0) {
      if (expect != residual_[v]) return tag + "residual mismatch";
    } else if (std::abs(arith_.Approx(expect) - arith_.Approx(residual_[v])) >
               tolerance * arith_.Approx(weight_[v])) {
      return tag + "residual drift beyond tolerance";
    }
    const bool below = arith_.AtOrBelow(residual_[v], threshold_[v]);
    if (vertex_deleted_[v] != 0 && !below) {
      return tag + "deleted above threshold";
    }
    if (vertex_deleted_[v] == 0 && below) {
      return tag + "live at or below threshold";
    }
  }
  return {};
}

using Float64State = PackingState<Float64Arith>;
using RationalState = PackingState<RationalArith>;
using ScaledIntState = PackingState<ScaledIntArith>;

}  // namespace pdcover

#endif  // PDCOVER_PACKING_STATE_HPP_
