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

#include "pdcover/io/bench.hpp"

#include <chrono>
#include <cstdio>

namespace pdcover::io {

NumericMode DefaultModeFor(const GraphStats& stats) {
  return static_cast<double>(stats.n) * static_cast<double>(stats.m) <= 1e5
             ? NumericMode::kRational
             : NumericMode::kFloat64;
}

std::vector<BenchRow> RunBench(const std::vector<BenchInstance>& suite,
                               const std::vector<Epsilon>& eps_list,
                               std::optional<NumericMode> mode,
                               unsigned workers) {
  std::vector<BenchRow> rows;
  SolveOptions options;
  options.workers = workers;
  options.record_round_details = false;
  for (const BenchInstance& instance : suite) {
    for (const Epsilon& eps : eps_list) {
      BenchRow row;
      row.instance = instance.name;
      row.stats = instance.graph.stats();
      row.eps = eps.ToString();
      row.mode = mode.value_or(DefaultModeFor(row.stats));
      const auto start = std::chrono::steady_clock::now();
      const CoverResult result = RunCover(instance.graph, eps, row.mode, options);
      const auto stop = std::chrono::steady_clock::now();
      row.wall_ms =
          std::chrono::duration<double, std::milli>(stop - start).count();
      row.rounds = result.rounds;
      row.round_bound = result.bounds.rounds;
      row.work = result.work;
      row.work_bound = result.bounds.work;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string FormatBenchTable(const std::vector<BenchRow>& rows) {
  std::string out =
      "instance\tmode\tm\tr\tM\teps\trounds\tround_bound\twork\twork_bound\t"
      "wall_ms\tok\n";
  char buffer[64];
  auto fixed = [&](double x) {
    std::snprintf(buffer, sizeof buffer, "%.3f", x);
    return std::string(buffer);
  };
  for (const BenchRow& row : rows) {
    out += row.instance + "\t" + std::string(NumericModeName(row.mode)) + "\t" +
           std::to_string(row.stats.m) + "\t" + std::to_string(row.stats.r) +
           "\t" + std::to_string(row.stats.M) + "\t" + row.eps + "\t" +
           std::to_string(row.rounds) + "\t" + fixed(row.round_bound) + "\t" +
           std::to_string(row.work) + "\t" + fixed(row.work_bound) + "\t" +
           fixed(row.wall_ms) + "\t" + (row.within_bounds() ? "yes" : "NO") +
           "\n";
  }
  return out;
}

}  // namespace pdcover::io
