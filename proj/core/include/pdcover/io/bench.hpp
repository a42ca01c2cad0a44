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

#ifndef PDCOVER_IO_BENCH_HPP_
#define PDCOVER_IO_BENCH_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pdcover/cover.hpp"
#include "pdcover/hypergraph.hpp"

namespace pdcover::io {

struct BenchInstance {
  std::string name;
  Hypergraph graph;
};

struct BenchRow {
  std::string instance;
  GraphStats stats;
  std::string eps;
  NumericMode mode = NumericMode::kFloat64;
  std::size_t rounds = 0;
  double round_bound = 0.0;
  std::size_t work = 0;
  double work_bound = 0.0;
  double wall_ms = 0.0;

  bool within_bounds() const {
    return static_cast<double>(rounds) <= round_bound &&
           static_cast<double>(work) <= work_bound;
  }
};

// Rational for small instances (n * m <= 1e5), Float64 above.
NumericMode DefaultModeFor(const GraphStats& stats);

std::vector<BenchRow> RunBench(const std::vector<BenchInstance>& suite,
                               const std::vector<Epsilon>& eps_list,
                               std::optional<NumericMode> mode,
                               unsigned workers = 1);

// Tab-separated, header line first.
std::string FormatBenchTable(const std::vector<BenchRow>& rows);

}  // namespace pdcover::io

#endif  // PDCOVER_IO_BENCH_HPP_
