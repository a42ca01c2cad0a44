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

// pdcover: primal-dual approximate vertex/set cover from the command line.
//
//   pdcover solve <instance> [--eps 0.1] [--mode float|rational|int]
//                 [--oracle] [--json out.json] [--workers N]
//   pdcover bench [<suite-dir>] [--gen spec]... [--eps 0.1,0.01] [--mode ...]
//   pdcover generate <spec> [--seed N] [-o out]
//   pdcover verify <instance> <result.json>
//
// Exit codes: 0 ok, 1 usage or other error, 2 parse error, 3 certificate or
// bound failure, 4 round cap exceeded.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pdcover/certificates.hpp"
#include "pdcover/cover.hpp"
#include "pdcover/error.hpp"
#include "pdcover/io/bench.hpp"
#include "pdcover/io/generate.hpp"
#include "pdcover/io/instance_format.hpp"
#include "pdcover/io/result_document.hpp"
#include "pdcover/reference.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitCertificate = 3;
constexpr int kExitRoundCap = 4;

using pdcover::Epsilon;
using pdcover::ErrorCode;
using pdcover::NumericMode;

int ExitFor(const pdcover::Error& e) {
  switch (e.code()) {
    case ErrorCode::kSyntaxError:
    case ErrorCode::kSemanticError:
      return kExitParse;
    case ErrorCode::kRoundBoundExceeded:
      return kExitRoundCap;
    case ErrorCode::kBoundViolated:
      return kExitCertificate;
    default:
      return kExitError;
  }
}

std::optional<NumericMode> ModeFlag(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto mode = pdcover::ParseNumericMode(text);
  if (!mode) throw CLI::ValidationError("--mode", "expected float, rational or int");
  return mode;
}

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw pdcover::Error(ErrorCode::kInvalidInputs, "cannot write '" + path + "'");
  }
  out << text;
}

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw pdcover::Error(ErrorCode::kInvalidInputs, "cannot read '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct SolveArgs {
  std::string instance;
  std::string eps = "0.1";
  std::string mode;
  bool oracle = false;
  std::string json;
  unsigned workers = 1;
};

int Solve(const SolveArgs& args) {
  const auto instance = pdcover::io::ReadInstanceFile(args.instance);
  const pdcover::Hypergraph& h = instance.hypergraph();
  const Epsilon eps = Epsilon::Parse(args.eps);
  const NumericMode mode =
      ModeFlag(args.mode).value_or(pdcover::io::DefaultModeFor(h.stats()));

  pdcover::SolveOptions options;
  options.workers = args.workers;
  const pdcover::CoverResult result = pdcover::RunCover(h, eps, mode, options);
  const pdcover::CertificateReport certificate =
      pdcover::Certify(h, result.cover, result.packing, eps,
                       pdcover::Tolerance::ForMode(mode));

  std::optional<pdcover::OracleResult> oracle;
  if (args.oracle) {
    if (h.num_vertices() <= pdcover::kMaxOracleVertices) {
      oracle = pdcover::BruteForceMinCover(h);
    } else {
      std::cerr << "pdcover: --oracle skipped, n = " << h.num_vertices()
                << " exceeds " << pdcover::kMaxOracleVertices << "\n";
    }
  }

  const std::string doc =
      pdcover::io::RenderResultDocument(instance, result, certificate, oracle);
  WriteText(args.json, doc);
  if (!args.json.empty() && args.json != "-") {
    std::cout << "cover weight " << pdcover::FormatRational(result.cover_weight)
              << ", packing " << pdcover::FormatRational(result.packing_weight)
              << ", rounds " << result.rounds << ", certificates "
              << (certificate.passed() ? "pass" : "FAIL") << "\n";
  }
  return certificate.passed() ? kExitOk : kExitCertificate;
}

struct BenchArgs {
  std::string suite;
  std::vector<std::string> generators;
  std::vector<std::string> eps{"0.1"};
  std::string mode;
  unsigned workers = 1;
  std::optional<std::uint64_t> seed;
};

int Bench(const BenchArgs& args) {
  std::vector<pdcover::io::BenchInstance> suite;
  if (!args.suite.empty()) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(args.suite)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
      suite.push_back({path.filename().string(),
                       pdcover::io::ReadInstanceFile(path).hypergraph()});
    }
  }
  for (const std::string& spec : args.generators) {
    auto params = pdcover::io::ParseGeneratorSpec(spec);
    if (args.seed) params.seed = *args.seed;
    const auto parsed =
        pdcover::io::ParseInstance(pdcover::io::Generate(params));
    suite.push_back({spec, parsed.hypergraph()});
  }
  if (suite.empty()) {
    throw CLI::ValidationError("bench", "give a suite directory or --gen");
  }
  std::vector<Epsilon> eps;
  for (const auto& text : args.eps) eps.push_back(Epsilon::Parse(text));

  const auto rows =
      pdcover::io::RunBench(suite, eps, ModeFlag(args.mode), args.workers);
  std::cout << pdcover::io::FormatBenchTable(rows);
  const auto violations = std::count_if(
      rows.begin(), rows.end(), [](const auto& row) { return !row.within_bounds(); });
  if (violations > 0) {
    throw pdcover::Error(ErrorCode::kBoundViolated,
                         std::to_string(violations) + " row(s) exceed a bound");
  }
  return kExitOk;
}

int Generate(const std::string& spec, std::optional<std::uint64_t> seed,
             const std::string& output) {
  auto params = pdcover::io::ParseGeneratorSpec(spec);
  if (seed) params.seed = *seed;
  WriteText(output, pdcover::io::Generate(params));
  return kExitOk;
}

int Verify(const std::string& instance_path, const std::string& result_path) {
  const auto instance = pdcover::io::ReadInstanceFile(instance_path);
  const auto outcome =
      pdcover::io::ReverifyResultDocument(instance, ReadText(result_path));
  std::cout << "stored verdict " << (outcome.stored_passed ? "pass" : "fail")
            << ", recomputed " << (outcome.recomputed.passed() ? "pass" : "fail")
            << ", " << (outcome.verdicts_match ? "consistent" : "MISMATCH")
            << "\n";
  return outcome.verdicts_match && outcome.recomputed.passed()
             ? kExitOk
             : kExitCertificate;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primal-dual approximate weighted vertex and set cover"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance file");
  solve_cmd->add_option("instance", solve.instance, "Instance file")->required();
  solve_cmd->add_option("--eps", solve.eps, "Approximation parameter in (0,1)");
  solve_cmd->add_option("--mode", solve.mode, "float | rational | int");
  solve_cmd->add_flag("--oracle", solve.oracle, "Compare with the exact optimum (n <= 24)");
  solve_cmd->add_option("--json", solve.json, "Write the result document here");
  solve_cmd->add_option("--workers", solve.workers, "Threads per round")
      ->check(CLI::PositiveNumber);

  BenchArgs bench;
  std::uint64_t bench_seed = 0;
  auto* bench_cmd = app.add_subcommand("bench", "Measure rounds and work against their bounds");
  bench_cmd->add_option("suite", bench.suite, "Directory of instance files");
  bench_cmd->add_option("--gen", bench.generators, "Generator spec, repeatable");
  bench_cmd->add_option("--eps", bench.eps, "Comma-separated eps values")->delimiter(',');
  bench_cmd->add_option("--mode", bench.mode, "float | rational | int");
  bench_cmd->add_option("--workers", bench.workers, "Threads per round")
      ->check(CLI::PositiveNumber);
  auto* bench_seed_opt =
      bench_cmd->add_option("--seed", bench_seed, "Seed for every --gen spec");

  std::string gen_spec;
  std::string gen_out;
  std::uint64_t gen_seed = 0;
  auto* gen_cmd = app.add_subcommand("generate", "Write a generated instance");
  gen_cmd->add_option("spec", gen_spec,
                      "kind:key=value,... with kind in random-hg, random-sc, "
                      "star, path, clique")
      ->required();
  auto* gen_seed_opt = gen_cmd->add_option("--seed", gen_seed, "Random seed");
  gen_cmd->add_option("-o,--output", gen_out, "Output file (default stdout)");

  std::string verify_instance;
  std::string verify_result;
  auto* verify_cmd = app.add_subcommand("verify", "Re-check a result document");
  verify_cmd->add_option("instance", verify_instance)->required();
  verify_cmd->add_option("result", verify_result)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  try {
    if (*solve_cmd) return Solve(solve);
    if (*bench_cmd) {
      if (*bench_seed_opt) bench.seed = bench_seed;
      return Bench(bench);
    }
    if (*gen_cmd) {
      return Generate(gen_spec,
                      *gen_seed_opt ? std::optional<std::uint64_t>(gen_seed)
                                    : std::nullopt,
                      gen_out);
    }
    if (*verify_cmd) return Verify(verify_instance, verify_result);
  } catch (const pdcover::Error& e) {
    std::cerr << "pdcover: " << e.what() << "\n";
    return ExitFor(e);
  } catch (const CLI::Error& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "pdcover: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
