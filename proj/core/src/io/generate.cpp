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

#include "pdcover/io/generate.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "pdcover/error.hpp"

namespace pdcover::io {

namespace {

[[noreturn]] void Infeasible(const std::string& what) {
  throw Error(ErrorCode::kInfeasibleParams, what);
}

// Uniform integer in [lo, hi] by rejection on the raw 64-bit stream, so the
// output depends only on the mt19937_64 sequence.
std::uint64_t UniformIndex(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::int64_t UniformInt(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  UniformIndex(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

// k distinct values from [0, n), in draw order.
std::vector<std::uint32_t> Sample(std::mt19937_64& rng, std::size_t n,
                                  std::size_t k) {
  std::vector<std::uint32_t> out;
  out.reserve(k);
  while (out.size() < k) {
    const auto x = static_cast<std::uint32_t>(UniformIndex(rng, n));
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

std::string HypergraphText(const std::vector<std::int64_t>& weights,
                           const std::vector<std::vector<std::uint32_t>>& edges) {
  std::string out = "p hg " + std::to_string(weights.size()) + " " +
                    std::to_string(edges.size()) + "\n";
  for (std::size_t v = 0; v < weights.size(); ++v) {
    out += "v " + std::to_string(v) + " " + std::to_string(weights[v]) + "\n";
  }
  for (const auto& edge : edges) {
    out += "e";
    for (auto v : edge) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

std::vector<std::int64_t> RandomWeights(std::mt19937_64& rng, std::size_t n,
                                        const GeneratorParams& p) {
  std::vector<std::int64_t> w(n);
  for (auto& x : w) x = UniformInt(rng, p.wmin, p.wmax);
  return w;
}

}  // namespace

std::string_view GeneratorKindName(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kRandomHypergraph: return "random-hg";
    case GeneratorKind::kRandomSetCover: return "random-sc";
    case GeneratorKind::kStar: return "star";
    case GeneratorKind::kPath: return "path";
    case GeneratorKind::kClique: return "clique";
  }
  return "unknown";
}

std::string Generate(const GeneratorParams& p) {
  if (p.wmin < 1 || p.wmax < p.wmin) {
    Infeasible("weight range must satisfy 1 <= wmin <= wmax");
  }
  if (p.n == 0) Infeasible("n must be positive");
  std::mt19937_64 rng(p.seed);
  std::string header = "c generated " + std::string(GeneratorKindName(p.kind)) +
                       " seed " + std::to_string(p.seed) + "\n";

  switch (p.kind) {
    case GeneratorKind::kRandomHypergraph: {
      if (p.r == 0 || p.r > p.n) Infeasible("need 1 <= r <= n");
      if (p.m == 0) Infeasible("m must be positive");
      const auto w = RandomWeights(rng, p.n, p);
      const std::size_t min_size = std::min<std::size_t>(2, p.r);
      std::vector<std::vector<std::uint32_t>> edges(p.m);
      for (auto& edge : edges) {
        const auto size = static_cast<std::size_t>(UniformInt(
            rng, static_cast<std::int64_t>(min_size),
            static_cast<std::int64_t>(p.r)));
        edge = Sample(rng, p.n, size);
      }
      return header + HypergraphText(w, edges);
    }
    case GeneratorKind::kRandomSetCover: {
      if (p.r == 0 || p.r > p.n) Infeasible("need 1 <= r <= number of sets");
      if (p.m == 0) Infeasible("m must be positive");
      const auto w = RandomWeights(rng, p.n, p);
      std::vector<std::vector<std::uint32_t>> members(p.n);
      for (std::uint32_t x = 0; x < p.m; ++x) {
        const auto k = static_cast<std::size_t>(
            UniformInt(rng, 1, static_cast<std::int64_t>(p.r)));
        for (auto s : Sample(rng, p.n, k)) members[s].push_back(x);
      }
      std::string out = header + "p sc " + std::to_string(p.n) + " " +
                        std::to_string(p.m) + "\n";
      for (std::size_t s = 0; s < p.n; ++s) {
        out += "s " + std::to_string(s) + " " + std::to_string(w[s]);
        for (auto x : members[s]) out += " " + std::to_string(x);
        out += "\n";
      }
      return out;
    }
    case GeneratorKind::kStar: {
      if (p.center_weight < 1) Infeasible("center weight must be positive");
      std::vector<std::int64_t> w{p.center_weight};
      const auto leaves = RandomWeights(rng, p.n, p);
      w.insert(w.end(), leaves.begin(), leaves.end());
      std::vector<std::vector<std::uint32_t>> edges;
      for (std::uint32_t leaf = 1; leaf <= p.n; ++leaf) edges.push_back({0, leaf});
      return header + HypergraphText(w, edges);
    }
    case GeneratorKind::kPath: {
      if (p.n < 2) Infeasible("a path needs at least 2 vertices");
      const auto w = RandomWeights(rng, p.n, p);
      std::vector<std::vector<std::uint32_t>> edges;
      for (std::uint32_t v = 0; v + 1 < p.n; ++v) edges.push_back({v, v + 1});
      return header + HypergraphText(w, edges);
    }
    case GeneratorKind::kClique: {
      if (p.n < 2) Infeasible("a clique needs at least 2 vertices");
      const auto w = RandomWeights(rng, p.n, p);
      std::vector<std::vector<std::uint32_t>> edges;
      for (std::uint32_t u = 0; u < p.n; ++u) {
        for (std::uint32_t v = u + 1; v < p.n; ++v) edges.push_back({u, v});
      }
      return header + HypergraphText(w, edges);
    }
  }
  Infeasible("unknown generator kind");
}

GeneratorParams ParseGeneratorSpec(std::string_view spec) {
  GeneratorParams p;
  const auto colon = spec.find(':');
  const std::string_view kind = spec.substr(0, colon);
  bool known = false;
  for (auto k : {GeneratorKind::kRandomHypergraph, GeneratorKind::kRandomSetCover,
                 GeneratorKind::kStar, GeneratorKind::kPath, GeneratorKind::kClique}) {
    if (GeneratorKindName(k) == kind) {
      p.kind = k;
      known = true;
    }
  }
  if (!known) Infeasible("unknown generator '" + std::string(kind) + "'");
  if (colon == std::string_view::npos) return p;

  std::string_view rest = spec.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) Infeasible("expected key=value, got '" + std::string(item) + "'");
    const std::string_view key = item.substr(0, eq);
    const std::string_view text = item.substr(eq + 1);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      Infeasible("bad value for '" + std::string(key) + "'");
    }
    if (key == "n" || key == "k") p.n = value;
    else if (key == "m") p.m = value;
    else if (key == "r") p.r = value;
    else if (key == "wmin") p.wmin = static_cast<std::int64_t>(value);
    else if (key == "wmax") p.wmax = static_cast<std::int64_t>(value);
    else if (key == "center") p.center_weight = static_cast<std::int64_t>(value);
    else if (key == "seed") p.seed = value;
    else Infeasible("unknown key '" + std::string(key) + "'");
  }
  return p;
}

}  // namespace pdcover::io
