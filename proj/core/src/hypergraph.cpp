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

#include "pdcover/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "pdcover/error.hpp"

namespace pdcover {

Hypergraph BuildHypergraph(std::vector<Rational> weights,
                           const std::vector<std::vector<VertexId>>& edges) {
  const std::size_t n = weights.size();
  Hypergraph h;
  for (std::size_t v = 0; v < n; ++v) {
    if (weights[v] <= 0) {
      throw Error(ErrorCode::kNonpositiveWeight,
                  "w(" + std::to_string(v) + ") = " + FormatRational(weights[v]));
    }
    if (!IsInteger(weights[v])) h.integer_weights_ = false;
    h.total_weight_ += weights[v];
  }

  std::vector<std::size_t> degree(n, 0);
  std::vector<std::size_t> seen(n, static_cast<std::size_t>(-1));
  h.edge_offsets_.reserve(edges.size() + 1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& edge = edges[e];
    if (edge.empty()) {
      throw Error(ErrorCode::kEmptyEdge, "edge " + std::to_string(e));
    }
    for (VertexId v : edge) {
      if (v >= n) {
        throw Error(ErrorCode::kUnknownVertex,
                    "edge " + std::to_string(e) + " names vertex " +
                        std::to_string(v) + " but n = " + std::to_string(n));
      }
      if (seen[v] == e) {
        throw Error(ErrorCode::kDuplicateVertexInEdge,
                    "edge " + std::to_string(e) + " repeats vertex " +
                        std::to_string(v));
      }
      seen[v] = e;
      ++degree[v];
      h.pins_.push_back(v);
    }
    h.edge_offsets_.push_back(h.pins_.size());
    h.stats_.r = std::max(h.stats_.r, edge.size());
  }

  h.vertex_offsets_.resize(n + 1);
  h.vertex_offsets_[0] = 0;
  for (std::size_t v = 0; v < n; ++v) {
    h.vertex_offsets_[v + 1] = h.vertex_offsets_[v] + degree[v];
  }
  h.incidence_.resize(h.pins_.size());
  std::vector<std::size_t> cursor(h.vertex_offsets_.begin(),
                                  h.vertex_offsets_.end() - 1);
  for (EdgeId e = 0; e < edges.size(); ++e) {
    for (VertexId v : edges[e]) h.incidence_[cursor[v]++] = e;
  }

  h.weights_f64_.reserve(n);
  for (const Rational& w : weights) h.weights_f64_.push_back(ToDouble(w));
  h.weights_ = std::move(weights);
  h.stats_.n = n;
  h.stats_.m = edges.size();
  h.stats_.M = h.pins_.size();
  return h;
}

Hypergraph BuildHypergraph(const std::vector<std::int64_t>& weights,
                           const std::vector<std::vector<VertexId>>& edges) {
  std::vector<Rational> exact;
  exact.reserve(weights.size());
  for (std::int64_t w : weights) exact.emplace_back(w);
  return BuildHypergraph(std::move(exact), edges);
}

Rational Hypergraph::WeightOf(std::span<const VertexId> vertices) const {
  Rational total = 0;
  for (VertexId v : vertices) total += weights_.at(v);
  return total;
}

bool Hypergraph::IncidenceConsistent() const {
  std::vector<std::vector<EdgeId>> expect(num_vertices());
  for (EdgeId e = 0; e < num_edges(); ++e) {
    for (VertexId v : pins(e)) expect[v].push_back(e);
  }
  for (VertexId v = 0; v < num_vertices(); ++v) {
    const auto got = incident_edges(v);
    if (!std::equal(got.begin(), got.end(), expect[v].begin(), expect[v].end())) {
      return false;
    }
  }
  return true;
}

}  // namespace pdcover
