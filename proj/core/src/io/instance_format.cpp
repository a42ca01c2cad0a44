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

#include "pdcover/io/instance_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pdcover/error.hpp"

namespace pdcover::io {

namespace {

[[noreturn]] void Syntax(std::size_t line, const std::string& what) {
  throw ParseError(ErrorCode::kSyntaxError, line, what);
}
[[noreturn]] void Semantic(std::size_t line, const std::string& what) {
  throw ParseError(ErrorCode::kSemanticError, line, what);
}

std::vector<std::string_view> SplitSpaces(std::string_view line,
                                          std::size_t line_no) {
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(' ', start);
    const std::string_view token = line.substr(start, end - start);
    if (token.empty()) Syntax(line_no, "expected single-space separators");
    tokens.push_back(token);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return tokens;
}

std::size_t ParseCount(std::string_view token, std::size_t line_no) {
  std::size_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    Syntax(line_no, "expected a non-negative integer, got '" +
                        std::string(token) + "'");
  }
  return value;
}

Rational ParseWeight(std::string_view token, std::size_t line_no) {
  auto w = ParseDecimal(token);
  if (!w) Syntax(line_no, "malformed weight '" + std::string(token) + "'");
  if (*w <= 0) Semantic(line_no, "weight must be positive");
  return *w;
}

struct Header {
  std::string kind;
  std::size_t first = 0;
  std::size_t second = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParsedInstance Run() {
    std::optional<Header> header;
    std::vector<std::optional<Rational>> weights;
    std::vector<std::vector<VertexId>> edges;
    std::vector<std::optional<WeightedSet>> sets;

    std::string_view line;
    while (Next(line)) {
      if (line.empty()) continue;
      if (line.front() == 'c' && (line.size() == 1 || line[1] == ' ')) continue;
      const auto tokens = SplitSpaces(line, line_no_);
      if (!header) {
        if (tokens[0] != "p" || tokens.size() != 4) {
          Syntax(line_no_, "expected 'p hg <n> <m>' or 'p sc <sets> <elements>'");
        }
        if (tokens[1] != "hg" && tokens[1] != "sc") {
          Syntax(line_no_, "unknown instance kind '" + std::string(tokens[1]) + "'");
        }
        header = Header{std::string(tokens[1]), ParseCount(tokens[2], line_no_),
                        ParseCount(tokens[3], line_no_)};
        if (header->kind == "hg") {
          weights.resize(header->first);
        } else {
          sets.resize(header->first);
        }
        continue;
      }
      if (header->kind == "hg") {
        HypergraphLine(tokens, *header, weights, edges);
      } else {
        SetLine(tokens, *header, sets);
      }
    }
    if (!header) Syntax(line_no_, "missing 'p' header");

    if (header->kind == "hg") {
      for (std::size_t v = 0; v < weights.size(); ++v) {
        if (!weights[v]) Semantic(line_no_, "no weight for vertex " + std::to_string(v));
      }
      if (edges.size() != header->second) {
        Semantic(line_no_, "header declares " + std::to_string(header->second) +
                               " edges, found " + std::to_string(edges.size()));
      }
      std::vector<Rational> w;
      w.reserve(weights.size());
      for (auto& x : weights) w.push_back(std::move(*x));
      try {
        return ParsedInstance(BuildHypergraph(std::move(w), edges));
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        Semantic(line_no_, e.what());
      }
    }

    std::vector<WeightedSet> family;
    family.reserve(sets.size());
    for (std::size_t s = 0; s < sets.size(); ++s) {
      if (!sets[s]) Semantic(line_no_, "no line for set " + std::to_string(s));
      family.push_back(std::move(*sets[s]));
    }
    try {
      return ParsedInstance(SetCoverInstance(std::move(family), header->second));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      Semantic(line_no_, e.what());
    }
  }

 private:
  bool Next(std::string_view& line) {
    if (pos_ >= text_.size()) return false;
    const std::size_t end = text_.find('\n', pos_);
    line = text_.substr(pos_, end - pos_);
    pos_ = end == std::string_view::npos ? text_.size() : end + 1;
    ++line_no_;
    if (!line.empty() && line.back() == '\r') {
      Syntax(line_no_, "CR line ending; expected LF");
    }
    return true;
  }

  void HypergraphLine(const std::vector<std::string_view>& tokens,
                      const Header& header,
                      std::vector<std::optional<Rational>>& weights,
                      std::vector<std::vector<VertexId>>& edges) {
    if (tokens[0] == "v") {
      if (tokens.size() != 3) Syntax(line_no_, "expected 'v <id> <weight>'");
      const std::size_t id = ParseCount(tokens[1], line_no_);
      if (id >= header.first) {
        Semantic(line_no_, "vertex id " + std::to_string(id) + " out of range");
      }
      if (weights[id]) Semantic(line_no_, "duplicate weight for vertex " + std::to_string(id));
      weights[id] = ParseWeight(tokens[2], line_no_);
      return;
    }
    if (tokens[0] == "e") {
      if (tokens.size() < 2) Semantic(line_no_, "empty edge");
      if (edges.size() >= header.second) {
        Semantic(line_no_, "more edges than declared");
      }
      std::vector<VertexId> edge;
      edge.reserve(tokens.size() - 1);
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        const std::size_t v = ParseCount(tokens[k], line_no_);
        if (v >= header.first) {
          Semantic(line_no_, "vertex id " + std::to_string(v) + " out of range");
        }
        if (Stamp(v)) {
          Semantic(line_no_, "vertex " + std::to_string(v) + " repeated in edge");
        }
        edge.push_back(static_cast<VertexId>(v));
      }
      edges.push_back(std::move(edge));
      return;
    }
    Syntax(line_no_, "unexpected line type '" + std::string(tokens[0]) + "'");
  }

  void SetLine(const std::vector<std::string_view>& tokens, const Header& header,
               std::vector<std::optional<WeightedSet>>& sets) {
    if (tokens[0] != "s") {
      Syntax(line_no_, "unexpected line type '" + std::string(tokens[0]) + "'");
    }
    if (tokens.size() < 3) Syntax(line_no_, "expected 's <id> <weight> <elem>...'");
    const std::size_t id = ParseCount(tokens[1], line_no_);
    if (id >= header.first) {
      Semantic(line_no_, "set id " + std::to_string(id) + " out of range");
    }
    if (sets[id]) Semantic(line_no_, "duplicate set " + std::to_string(id));
    WeightedSet set;
    set.weight = ParseWeight(tokens[2], line_no_);
    for (std::size_t k = 3; k < tokens.size(); ++k) {
      const std::size_t x = ParseCount(tokens[k], line_no_);
      if (x >= header.second) {
        Semantic(line_no_, "element id " + std::to_string(x) + " out of range");
      }
      if (Stamp(x)) {
        Semantic(line_no_, "element " + std::to_string(x) + " repeated in set");
      }
      set.elements.push_back(static_cast<ElementId>(x));
    }
    sets[id] = std::move(set);
  }

  // Marks `id` as seen on the current line; true if it already was.
  bool Stamp(std::size_t id) {
    if (id >= stamp_.size()) stamp_.resize(id + 1, 0);
    if (stamp_[id] == line_no_) return true;
    stamp_[id] = line_no_;
    return false;
  }

  std::string_view text_;
  std::vector<std::size_t> stamp_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

std::string WeightText(const Rational& w) {
  auto text = FormatDecimal(w);
  if (!text) {
    throw Error(ErrorCode::kInvalidInputs,
                "weight " + FormatRational(w) + " is not a short decimal");
  }
  return *text;
}

}  // namespace

ParsedInstance ParseInstance(std::string_view text) {
  return Parser(text).Run();
}

ParsedInstance ReadInstanceFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kInvalidInputs,
                "cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

std::string EmitHypergraph(const Hypergraph& h) {
  std::string out = "p hg " + std::to_string(h.num_vertices()) + " " +
                    std::to_string(h.num_edges()) + "\n";
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    out += "v " + std::to_string(v) + " " + WeightText(h.weight(v)) + "\n";
  }
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    out += "e";
    for (VertexId v : h.pins(e)) {
      out += ' ';
      out += std::to_string(v);
    }
    out += '\n';
  }
  return out;
}

std::string EmitSetCover(const SetCoverInstance& inst) {
  std::string out = "p sc " + std::to_string(inst.num_sets()) + " " +
                    std::to_string(inst.num_elements()) + "\n";
  for (SetId s = 0; s < inst.num_sets(); ++s) {
    const WeightedSet& set = inst.set(s);
    out += "s " + std::to_string(s) + " " + WeightText(set.weight);
    for (ElementId x : set.elements) {
      out += ' ';
      out += std::to_string(x);
    }
    out += '\n';
  }
  return out;
}

std::string EmitInstance(const ParsedInstance& instance) {
  return instance.is_set_cover() ? EmitSetCover(instance.set_cover())
                                 : EmitHypergraph(instance.hypergraph());
}

}  // namespace pdcover::io
