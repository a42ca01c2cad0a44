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

#ifndef PDCOVER_SET_COVER_HPP_
#define PDCOVER_SET_COVER_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "pdcover/hypergraph.hpp"
#include "pdcover/numeric.hpp"

namespace pdcover {

using SetId = std::uint32_t;
using ElementId = std::uint32_t;

struct WeightedSet {
  Rational weight;
  std::vector<ElementId> elements;
};

// A weighted set family over the universe 0..num_elements-1, together with
// its hypergraph image: one vertex per set (same weight) and one edge per
// element containing the vertices of the sets that hold it.
class SetCoverInstance {
 public:
  // Throws kNonpositiveWeight, kUnknownElement, kDuplicateElementInSet or
  // kUncoveredElement.
  SetCoverInstance(std::vector<WeightedSet> sets, std::size_t num_elements);

  std::size_t num_sets() const { return sets_.size(); }
  std::size_t num_elements() const { return num_elements_; }
  const WeightedSet& set(SetId s) const { return sets_[s]; }
  std::span<const WeightedSet> sets() const { return sets_; }

  const Hypergraph& hypergraph() const { return image_; }

  VertexId vertex_of_set(SetId s) const { return vertex_of_set_.at(s); }
  SetId set_of_vertex(VertexId v) const { return set_of_vertex_.at(v); }
  EdgeId edge_of_element(ElementId x) const { return edge_of_element_.at(x); }
  ElementId element_of_edge(EdgeId e) const { return element_of_edge_.at(e); }

 private:
  std::vector<WeightedSet> sets_;
  std::size_t num_elements_;
  Hypergraph image_;
  std::vector<VertexId> vertex_of_set_;
  std::vector<SetId> set_of_vertex_;
  std::vector<EdgeId> edge_of_element_;
  std::vector<ElementId> element_of_edge_;
};

// The hypergraph image of the instance.
inline const Hypergraph& FromSetCover(const SetCoverInstance& inst) {
  return inst.hypergraph();
}

// Translate solutions on the image back to the set family. Both throw
// kUnknownId on an out-of-range vertex id or a packing of the wrong length.
std::vector<SetId> CoverToSetSolution(const SetCoverInstance& inst,
                                      std::span<const VertexId> cover);
std::vector<Rational> PackingToElementSolution(const SetCoverInstance& inst,
                                               std::span<const Rational> p);

}  // namespace pdcover

#endif  // PDCOVER_SET_COVER_HPP_
