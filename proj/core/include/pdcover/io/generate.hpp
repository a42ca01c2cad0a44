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

#ifndef PDCOVER_IO_GENERATE_HPP_
#define PDCOVER_IO_GENERATE_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace pdcover::io {

enum class GeneratorKind { kRandomHypergraph, kRandomSetCover, kStar, kPath, kClique };

// Field meaning by kind:
//   random-hg  n vertices, m edges, edge sizes uniform in [min(2,r), r]
//   random-sc  n sets, m elements, each element in 1..r random sets
//   star       n leaves around vertex 0 (weight center_weight)
//   path       n vertices in a line
//   clique     n vertices, all pairs
// Weights are uniform integers in [wmin, wmax].
struct GeneratorParams {
  GeneratorKind kind = GeneratorKind::kRandomHypergraph;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t r = 2;
  std::int64_t wmin = 1;
  std::int64_t wmax = 1;
  std::int64_t center_weight = 1;
  std::uint64_t seed = 0;
};

// Instance-file text. Byte-identical output for equal params. Throws
// Error(kInfeasibleParams).
std::string Generate(const GeneratorParams& params);

// "kind:key=value,..." e.g. "random-hg:n=100,m=300,r=3,wmin=1,wmax=100,seed=7".
// Throws Error(kInfeasibleParams) on unknown kinds or keys.
GeneratorParams ParseGeneratorSpec(std::string_view spec);
std::string_view GeneratorKindName(GeneratorKind kind);

}  // namespace pdcover::io

#endif  // PDCOVER_IO_GENERATE_HPP_
