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

#include "pdcover/set_cover.hpp"

#include <string>

#include "pdcover/error.hpp"

namespace pdcover {

SetCoverInstance::SetCoverInstance(std::vector<WeightedSet> sets,
                                   std::size_t num_elements)
    : sets_(std::move(sets)), num_elements_(num_elements) {
  std::vector<std::vector<VertexId>> edges(num_elements);
  std::vector<std::size_t> seen(num_elements, static_cast<std::size_t>(-1));
  std::vector<Rational> weights;
  weights.reserve(sets_.size());
  for (SetId s = 0; s < sets_.size(); ++s) {
    const WeightedSet& set = sets_[s];
    if (set.weight <= 0) {
      throw Error(ErrorCode::kNonpositiveWeight,
                  "set " + std::to_string(s) + " has weight " +
                      FormatRational(set.weight));
    }
    for (ElementId x : set.elements) {
      if (x >= num_elements) {
        throw Error(ErrorCode::kUnknownElement,
                    "set " + std::to_string(s) + " names element " +
                        std::to_string(x));
      }
      if (seen[x] == s) {
        throw Error(ErrorCode::kDuplicateElementInSet,
                    "set " + std::to_string(s) + " repeats element " +
                        std::to_string(x));
      }
      seen[x] = s;
      edges[x].push_back(s);
    }
    weights.push_back(set.weight);
  }
  for (ElementId x = 0; x < num_elements; ++x) {
    if (edges[x].empty()) {
      throw Error(ErrorCode::kUncoveredElement,
                  "element " + std::to_string(x) + " is in no set");
    }
  }
  image_ = BuildHypergraph(std::move(weights), edges);

  vertex_of_set_.resize(sets_.size());
  set_of_vertex_.resize(sets_.size());
  for (SetId s = 0; s < sets_.size(); ++s) {
    vertex_of_set_[s] = s;
    set_of_vertex_[s] = s;
  }
  edge_of_element_.resize(num_elements);
  element_of_edge_.resize(num_elements);
  for (ElementId x = 0; x < num_elements; ++x) {
    edge_of_element_[x] = x;
    element_of_edge_[x] = x;
  }
}

std::vector<SetId> CoverToSetSolution(const SetCoverInstance& inst,
                                      std::span<const VertexId> cover) {
  std::vector<SetId> out;
  out.reserve(cover.size());
  for (VertexId v : cover) {
    if (v >= inst.num_sets()) {
      throw Error(ErrorCode::kUnknownId, "vertex " + std::to_string(v));
    }
    out.push_back(inst.set_of_vertex(v));
  }
  return out;
}

std::vector<Rational> PackingToElementSolution(const SetCoverInstance& inst,
                                               std::span<const Rational> p) {
  if (p.size() != inst.num_elements()) {
    throw Error(ErrorCode::kUnknownId,
                "packing has " + std::to_string(p.size()) + " values for " +
                    std::to_string(inst.num_elements()) + " elements");
  }
  std::vector<Rational> out(inst.num_elements());
  for (EdgeId e = 0; e < p.size(); ++e) out[inst.element_of_edge(e)] = p[e];
  return out;
}

}  // namespace pdcover
