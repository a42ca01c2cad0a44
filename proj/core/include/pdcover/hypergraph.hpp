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

#ifndef PDCOVER_HYPERGRAPH_HPP_
#define PDCOVER_HYPERGRAPH_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "pdcover/numeric.hpp"

namespace pdcover {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct GraphStats {
  std::size_t n = 0;  // vertices
  std::size_t m = 0;  // edges
  std::size_t r = 0;  // rank, the largest edge size
  std::size_t M = 0;  // size, the sum of edge sizes

  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

// Immutable vertex-weighted hypergraph. Vertices are dense ids 0..n-1, edges
// are dense ids 0..m-1 in input order. Both the pin lists (edge -> vertices,
// as given) and the incidence lists (vertex -> edges, ascending) are stored
// in CSR form. Safe for concurrent reads.
class Hypergraph {
 public:
  Hypergraph() = default;

  std::size_t num_vertices() const { return weights_.size(); }
  std::size_t num_edges() const { return edge_offsets_.size() - 1; }

  const Rational& weight(VertexId v) const { return weights_[v]; }
  std::span<const Rational> weights() const { return weights_; }
  // w(v) rounded to binary64 once at construction.
  std::span<const double> weights_f64() const { return weights_f64_; }

  std::span<const VertexId> pins(EdgeId e) const {
    return {pins_.data() + edge_offsets_[e],
            pins_.data() + edge_offsets_[e + 1]};
  }
  std::span<const EdgeId> incident_edges(VertexId v) const {
    return {incidence_.data() + vertex_offsets_[v],
            incidence_.data() + vertex_offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const {
    return vertex_offsets_[v + 1] - vertex_offsets_[v];
  }
  std::size_t edge_size(EdgeId e) const {
    return edge_offsets_[e + 1] - edge_offsets_[e];
  }

  // Raw CSR arrays, for engines that keep per-vertex live prefixes.
  std::span<const std::size_t> vertex_offsets() const { return vertex_offsets_; }
  std::span<const EdgeId> incidence() const { return incidence_; }

  const GraphStats& stats() const { return stats_; }
  // w(V)
  const Rational& total_weight() const { return total_weight_; }
  bool has_integer_weights() const { return integer_weights_; }

  // Weight of a vertex set, exactly.
  Rational WeightOf(std::span<const VertexId> vertices) const;

  // Recomputes the incidence lists from the pin lists and compares. Used by
  // tests; construction already guarantees it.
  bool IncidenceConsistent() const;

 private:
  friend Hypergraph BuildHypergraph(std::vector<Rational> weights,
                                    const std::vector<std::vector<VertexId>>& edges);

  std::vector<Rational> weights_;
  std::vector<double> weights_f64_;
  std::vector<std::size_t> edge_offsets_{0};
  std::vector<VertexId> pins_;
  std::vector<std::size_t> vertex_offsets_{0};
  std::vector<EdgeId> incidence_;
  GraphStats stats_;
  Rational total_weight_;
  bool integer_weights_ = true;
};

// Validates and builds. Throws Error with kEmptyEdge, kUnknownVertex,
// kNonpositiveWeight or kDuplicateVertexInEdge. Identical edges are kept as
// distinct edges; isolated vertices are allowed.
Hypergraph BuildHypergraph(std::vector<Rational> weights,
                           const std::vector<std::vector<VertexId>>& edges);

// Convenience overload for integer weights.
Hypergraph BuildHypergraph(const std::vector<std::int64_t>& weights,
                           const std::vector<std::vector<VertexId>>& edges);

inline const GraphStats& Stats(const Hypergraph& h) { return h.stats(); }

}  // namespace pdcover

#endif  // PDCOVER_HYPERGRAPH_HPP_
