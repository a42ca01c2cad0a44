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

#ifndef PDCOVER_IO_INSTANCE_FORMAT_HPP_
#define PDCOVER_IO_INSTANCE_FORMAT_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "pdcover/hypergraph.hpp"
#include "pdcover/set_cover.hpp"

namespace pdcover::io {

// Text instance formats, ASCII with LF line endings and single-space
// separators:
//
//   c <free text>                       comment, anywhere
//   p hg <n> <m>                        hypergraph header
//   v <id> <weight>                     one per vertex
//   e <vid> <vid> ...                   one per edge, in edge-id order
//
//   p sc <num_sets> <num_elements>      set-cover header
//   s <id> <weight> <elem> <elem> ...   one per set
//
// Weights are positive decimals with at most nine fractional digits.
class ParsedInstance {
 public:
  explicit ParsedInstance(Hypergraph h) : value_(std::move(h)) {}
  explicit ParsedInstance(SetCoverInstance sc) : value_(std::move(sc)) {}

  bool is_set_cover() const {
    return std::holds_alternative<SetCoverInstance>(value_);
  }
  const SetCoverInstance& set_cover() const {
    return std::get<SetCoverInstance>(value_);
  }
  // The instance itself, or the image of a set-cover instance.
  const Hypergraph& hypergraph() const {
    return is_set_cover() ? set_cover().hypergraph()
                          : std::get<Hypergraph>(value_);
  }

 private:
  std::variant<Hypergraph, SetCoverInstance> value_;
};

// Throws ParseError with kSyntaxError or kSemanticError.
ParsedInstance ParseInstance(std::string_view text);
ParsedInstance ReadInstanceFile(const std::filesystem::path& path);

// Throws Error(kInvalidInputs) for weights that are not terminating
// decimals with at most nine fractional digits.
std::string EmitHypergraph(const Hypergraph& h);
std::string EmitSetCover(const SetCoverInstance& inst);
std::string EmitInstance(const ParsedInstance& instance);

}  // namespace pdcover::io

#endif  // PDCOVER_IO_INSTANCE_FORMAT_HPP_
