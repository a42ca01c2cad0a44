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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pdcover/certificates.hpp"
#include "pdcover/cover.hpp"
#include "pdcover/error.hpp"
#include "pdcover/io/bench.hpp"
#include "pdcover/io/generate.hpp"
#include "pdcover/io/instance_format.hpp"
#include "pdcover/io/result_document.hpp"
#include "pdcover/reference.hpp"
#include "test_util.hpp"

namespace pdcover::io {
namespace {

using pdcover::testing::Triangle;

ParseError ParseFailure(std::string_view text) {
  try {
    ParseInstance(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed: " << text;
  return ParseError(ErrorCode::kSyntaxError, 0, "none");
}

TEST(ParseInstanceTest, SingleEdge) {
  const ParsedInstance p = ParseInstance("p hg 2 1\nv 0 1\nv 1 2\ne 0 1\n");
  ASSERT_FALSE(p.is_set_cover());
  const Hypergraph& h = p.hypergraph();
  EXPECT_EQ(h.num_vertices(), 2u);
  EXPECT_EQ(h.num_edges(), 1u);
  EXPECT_EQ(h.weight(1), Rational(2));
  EXPECT_EQ(std::vector<VertexId>(h.pins(0).begin(), h.pins(0).end()),
            (std::vector<VertexId>{0, 1}));
}

TEST(ParseInstanceTest, TwoSets) {
  const ParsedInstance p = ParseInstance("p sc 2 3\ns 0 1 0 1\ns 1 2 1 2\n");
  ASSERT_TRUE(p.is_set_cover());
  const Hypergraph& h = p.hypergraph();
  EXPECT_EQ(h.num_vertices(), 2u);
  EXPECT_EQ(h.num_edges(), 3u);
  EXPECT_EQ(h.stats().r, 2u);
  EXPECT_EQ(h.edge_size(1), 2u);
}

TEST(ParseInstanceTest, CommentsDecimalsAndMissingNewline) {
  const ParsedInstance p =
      ParseInstance("c hello\np hg 2 1\nc mid\nv 0 0.5\n\nv 1 1.000000001\ne 1 0");
  EXPECT_EQ(p.hypergraph().weight(0), Rational(1, 2));
  EXPECT_EQ(p.hypergraph().weight(1), Rational(1000000001, 1000000000));
}

TEST(ParseInstanceTest, UnknownVertexReportsLine) {
  const ParseError e = ParseFailure("p hg 2 1\nv 0 1\nv 1 2\ne 0 5\n");
  EXPECT_EQ(e.code(), ErrorCode::kSemanticError);
  EXPECT_EQ(e.line(), 4u);
}

TEST(ParseInstanceTest, SyntaxErrors) {
  struct Case {
    const char* text;
    std::size_t line;
  };
  const Case cases[] = {
      {"v 0 1\n", 1},                              // header must come first
      {"p hg 1 0\nv 0  1\n", 2},                   // double space
      {"p hg 1 0\nv 0 1\r\n", 2},                  // CR
      {"p hg 1 0\nv 0 1.0000000001\n", 2},         // ten fractional digits
      {"p hg 1 0\nv 0 -1\n", 2},
      {"p hg 1 0\nv 0 abc\n", 2},
      {"p xx 1 0\n", 1},
      {"p hg 1 1\nv 0 1\ne\n", 3},
      {"p hg 1 0\nv 0 1\nq\n", 3},
  };
  for (const Case& c : cases) {
    const ParseError e = ParseFailure(c.text);
    EXPECT_EQ(e.line(), c.line) << c.text;
  }
}

TEST(ParseInstanceTest, SemanticErrors) {
  struct Case {
    const char* text;
    std::size_t line;
  };
  const Case cases[] = {
      {"p hg 2 1\nv 0 1\nv 0 1\ne 0 1\n", 3},      // duplicate vertex id
      {"p hg 2 1\nv 0 1\nv 2 1\ne 0 1\n", 3},      // id out of range
      {"p hg 2 1\nv 0 0\nv 1 1\ne 0 1\n", 2},      // zero weight
      {"p hg 2 1\nv 0 1\nv 1 1\ne 0 0\n", 4},      // repeated pin
      {"p hg 2 2\nv 0 1\nv 1 1\ne 0 1\n", 4},      // missing edge
      {"p hg 2 1\nv 0 1\ne 0 1\n", 3},             // missing vertex
      {"p hg 2 1\nv 0 1\nv 1 1\ne 0 1\ne 1\n", 5}, // extra edge
      {"p sc 2 3\ns 0 1 0 1\ns 1 2 1\n", 3},       // element 2 uncovered
      {"p sc 1 2\ns 0 1 0 2\n", 2},                // unknown element
      {"p sc 1 2\ns 0 1 0 0 1\n", 2},              // duplicate element
  };
  for (const Case& c : cases) {
    const ParseError e = ParseFailure(c.text);
    EXPECT_EQ(e.code(), ErrorCode::kSemanticError) << c.text;
    EXPECT_EQ(e.line(), c.line) << c.text;
  }
}

TEST(ParseInstanceTest, ReadsFiles) {
  const ParsedInstance t = ReadInstanceFile(PDCOVER_TEST_DATA "/triangle.hg");
  EXPECT_EQ(t.hypergraph().num_edges(), 3u);
  EXPECT_THROW(ReadInstanceFile(PDCOVER_TEST_DATA "/bad_vertex.hg"), ParseError);
  EXPECT_THROW(ReadInstanceFile(PDCOVER_TEST_DATA "/no_such_file.hg"), Error);
}

bool SameStructure(const Hypergraph& a, const Hypergraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) {
    return false;
  }
  for (VertexId v = 0; v < a.num_vertices(); ++v) {
    if (a.weight(v) != b.weight(v)) return false;
  }
  for (EdgeId e = 0; e < a.num_edges(); ++e) {
    if (!std::ranges::equal(a.pins(e), b.pins(e))) return false;
  }
  return true;
}

TEST(EmitInstanceTest, RoundTripsGeneratedInstances) {
  for (GeneratorKind kind : {GeneratorKind::kRandomHypergraph, GeneratorKind::kRandomSetCover,
                             GeneratorKind::kStar, GeneratorKind::kPath, GeneratorKind::kClique}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      GeneratorParams g;
      g.kind = kind;
      g.n = 6 + seed;
      g.m = 10 + 2 * seed;
      g.r = 3;
      g.wmin = 1;
      g.wmax = 40;
      g.center_weight = 3;
      g.seed = seed;
      const ParsedInstance first = ParseInstance(Generate(g));
      const std::string text = EmitInstance(first);
      const ParsedInstance second = ParseInstance(text);
      EXPECT_EQ(first.is_set_cover(), second.is_set_cover());
      EXPECT_TRUE(SameStructure(first.hypergraph(), second.hypergraph()));
      EXPECT_EQ(EmitInstance(second), text);
    }
  }
}

TEST(EmitInstanceTest, DecimalWeightsSurvive) {
  const Hypergraph h = BuildHypergraph(
      std::vector<Rational>{Rational(1, 8), Rational(123456789, 1000)}, {{0, 1}, {1}});
  const std::string text = EmitHypergraph(h);
  EXPECT_TRUE(SameStructure(h, ParseInstance(text).hypergraph()));
  const Hypergraph third = BuildHypergraph(std::vector<Rational>{Rational(1, 3)}, {{0}});
  EXPECT_THROW(EmitHypergraph(third), Error);
}

TEST(GenerateTest, StarMatchesHandInstance) {
  const ParsedInstance p = ParseInstance(Generate(ParseGeneratorSpec("star:k=3,center=2")));
  EXPECT_TRUE(SameStructure(p.hypergraph(), pdcover::testing::Star3()));
}

TEST(GenerateTest, SameSeedSameBytes) {
  const GeneratorParams g = ParseGeneratorSpec("random-hg:n=50,m=120,r=4,wmin=1,wmax=9,seed=11");
  EXPECT_EQ(Generate(g), Generate(g));
  GeneratorParams other = g;
  other.seed = 12;
  EXPECT_NE(Generate(g), Generate(other));
  const GeneratorParams s = ParseGeneratorSpec("random-sc:n=20,m=60,r=3,wmax=5,seed=1");
  EXPECT_EQ(Generate(s), Generate(s));
}

TEST(GenerateTest, RandomHypergraphValidates) {
  const GeneratorParams g =
      ParseGeneratorSpec("random-hg:n=100,m=300,r=3,wmin=1,wmax=100,seed=7");
  const ParsedInstance p = ParseInstance(Generate(g));
  const GraphStats& s = p.hypergraph().stats();
  EXPECT_EQ(s.n, 100u);
  EXPECT_EQ(s.m, 300u);
  EXPECT_LE(s.r, 3u);
  for (VertexId v = 0; v < s.n; ++v) {
    EXPECT_GE(p.hypergraph().weight(v), 1);
    EXPECT_LE(p.hypergraph().weight(v), 100);
  }
}

TEST(GenerateTest, RejectsBadParams) {
  for (const char* spec : {"random-hg:n=2,m=3,r=3", "random-hg:n=0,m=3,r=1",
                           "random-hg:n=5,m=3,r=2,wmin=0", "random-hg:n=5,m=3,r=2,wmin=4,wmax=3",
                           "random-sc:n=2,m=3,r=3", "nope:n=1", "star:k=3,bogus=1",
                           "path:n=1", "clique:n=1"}) {
    try {
      Generate(ParseGeneratorSpec(spec));
      ADD_FAILURE() << spec;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInfeasibleParams) << spec;
    }
  }
}

std::string Solve(const ParsedInstance& p, const char* eps, NumericMode mode,
                  bool oracle = false, unsigned workers = 1) {
  const Epsilon e = Epsilon::Parse(eps);
  SolveOptions options;
  options.workers = workers;
  const CoverResult r = RunCover(p.hypergraph(), e, mode, options);
  const CertificateReport c =
      Certify(p.hypergraph(), r.cover, r.packing, e, Tolerance::ForMode(mode));
  std::optional<OracleResult> o;
  if (oracle) o = BruteForceMinCover(p.hypergraph());
  return RenderResultDocument(p, r, c, o);
}

using Json = nlohmann::json;

TEST(ResultDocumentTest, TriangleDocument) {
  const ParsedInstance p{Triangle()};
  const Json doc = Json::parse(Solve(p, "0.1", NumericMode::kRational, true));
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["mode"], "rational");
  EXPECT_EQ(doc["eps"], "0.1");
  EXPECT_EQ(doc["rounds"], 1);
  EXPECT_EQ(doc["cover"], Json::parse("[0,1,2]"));
  EXPECT_EQ(doc["cover_weight"]["exact"], "3");
  EXPECT_EQ(doc["packing_weight"]["exact"], "3/2");
  EXPECT_EQ(doc["round_reports"].size(), 1u);
  EXPECT_EQ(doc["round_reports"][0]["edges_at_start"], 3);
  EXPECT_FALSE(doc["round_reports_truncated"].get<bool>());
  EXPECT_TRUE(doc["certificate"]["passed"].get<bool>());
  EXPECT_TRUE(doc["bounds"]["rounds_within_bound"].get<bool>());
  EXPECT_EQ(doc["bounds"]["work"], 3);
  EXPECT_EQ(doc["oracle"]["opt_weight"]["exact"], "2");
  EXPECT_DOUBLE_EQ(doc["oracle"]["ratio"].get<double>(), 1.5);
  EXPECT_LE(doc["oracle"]["ratio"].get<double>(), 2.0 / 0.9);
}

TEST(ResultDocumentTest, PathWithOracleHasRatioOne) {
  const ParsedInstance p = ReadInstanceFile(PDCOVER_TEST_DATA "/path.hg");
  const Json doc = Json::parse(Solve(p, "0.25", NumericMode::kRational, true));
  EXPECT_EQ(doc["cover"], Json::parse("[1]"));
  EXPECT_DOUBLE_EQ(doc["oracle"]["ratio"].get<double>(), 1.0);
}

TEST(ResultDocumentTest, ReverifiesInEveryMode) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ParsedInstance p = ParseInstance(
        Generate(ParseGeneratorSpec("random-hg:n=30,m=80,r=3,wmax=20,seed=" +
                                    std::to_string(seed))));
    for (NumericMode mode : {NumericMode::kFloat64, NumericMode::kRational,
                             NumericMode::kScaledInteger}) {
      const Reverification v = ReverifyResultDocument(p, Solve(p, "0.1", mode));
      EXPECT_TRUE(v.verdicts_match);
      EXPECT_TRUE(v.stored_passed);
      EXPECT_TRUE(v.recomputed.passed());
    }
  }
}

TEST(ResultDocumentTest, TamperingIsDetected) {
  const ParsedInstance p{Triangle()};
  Json doc = Json::parse(Solve(p, "0.1", NumericMode::kRational));
  doc["cover"] = Json::parse("[0]");
  const Reverification v = ReverifyResultDocument(p, doc.dump());
  EXPECT_FALSE(v.verdicts_match);
  EXPECT_FALSE(v.recomputed.is_cover);

  Json wrong_kind = Json::parse(Solve(p, "0.1", NumericMode::kRational));
  wrong_kind["instance"]["m"] = 4;
  EXPECT_THROW(ReverifyResultDocument(p, wrong_kind.dump()), Error);
  EXPECT_THROW(ReverifyResultDocument(p, "{not json"), Error);
}

TEST(ResultDocumentTest, SetCoverTranslatesIds) {
  const ParsedInstance p = ReadInstanceFile(PDCOVER_TEST_DATA "/two_sets.sc");
  const std::string text = Solve(p, "0.1", NumericMode::kRational);
  const Json doc = Json::parse(text);
  EXPECT_EQ(doc["instance"]["kind"], "sc");
  EXPECT_EQ(doc["packing"].size(), 3u);
  EXPECT_TRUE(ReverifyResultDocument(p, text).verdicts_match);
}

TEST(ResultDocumentTest, SetCoverAndImageAgree) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ParsedInstance sc = ParseInstance(Generate(ParseGeneratorSpec(
        "random-sc:n=15,m=40,r=3,wmax=30,seed=" + std::to_string(seed))));
    const ParsedInstance image = ParseInstance(EmitHypergraph(sc.hypergraph()));
    for (NumericMode mode : {NumericMode::kRational, NumericMode::kScaledInteger}) {
      const Json a = Json::parse(Solve(sc, "0.1", mode));
      const Json b = Json::parse(Solve(image, "0.1", mode));
      EXPECT_EQ(a["cover_weight"], b["cover_weight"]);
      EXPECT_EQ(a["packing_weight"], b["packing_weight"]);
    }
  }
}

TEST(ResultDocumentTest, RoundReportsAreCapped) {
  const ParsedInstance p{Triangle()};
  const Epsilon eps = Epsilon::Parse("0.1");
  CoverResult r = RunCover(p.hypergraph(), eps, NumericMode::kRational);
  const RoundReport one = r.reports.front();
  r.reports.assign(kMaxReportedRounds + 5, one);
  const CertificateReport c = Certify(p.hypergraph(), r.cover, r.packing, eps);
  const Json doc = Json::parse(RenderResultDocument(p, r, c, std::nullopt));
  EXPECT_EQ(doc["round_reports"].size(), kMaxReportedRounds);
  EXPECT_TRUE(doc["round_reports_truncated"].get<bool>());
}

TEST(ResultDocumentTest, ByteIdenticalAcrossRunsAndWorkers) {
  const ParsedInstance p = ParseInstance(Generate(
      ParseGeneratorSpec("random-hg:n=3000,m=12000,r=3,wmax=500,seed=5")));
  for (NumericMode mode : {NumericMode::kFloat64, NumericMode::kScaledInteger}) {
    const std::string base = Solve(p, "0.05", mode);
    EXPECT_EQ(Solve(p, "0.05", mode), base);
    EXPECT_EQ(Solve(p, "0.05", mode, false, 4), base);
  }
}

TEST(BenchTest, TriangleRow) {
  std::vector<BenchInstance> suite;
  suite.push_back({"triangle", Triangle()});
  const auto rows = RunBench(suite, {Epsilon::Parse("0.1")}, NumericMode::kRational);
  ASSERT_EQ(rows.size(), 1u);
  const BenchRow& row = rows[0];
  EXPECT_EQ(row.rounds, 1u);
  EXPECT_NEAR(row.round_bound, (1 + 2 * std::log(10.0)) * (1 + std::log(3.0)), 1e-9);
  EXPECT_NEAR(row.round_bound, 11.8, 0.05);
  EXPECT_EQ(row.work, 3u);
  EXPECT_NEAR(row.work_bound, 3 + 6 * std::log(10.0), 1e-9);
  EXPECT_TRUE(row.within_bounds());

  const std::string table = FormatBenchTable(rows);
  std::istringstream lines(table);
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  EXPECT_EQ(header.rfind("instance\tmode\tm\tr\tM\teps\trounds", 0), 0u);
  EXPECT_EQ(first.rfind("triangle\trational\t3\t2\t6\t0.1\t1\t", 0), 0u);
}

TEST(BenchTest, DefaultModeSwitchesOnSize) {
  EXPECT_EQ(DefaultModeFor(GraphStats{100, 1000, 2, 2000}), NumericMode::kRational);
  EXPECT_EQ(DefaultModeFor(GraphStats{1000, 1000, 2, 2000}), NumericMode::kFloat64);
}

TEST(BenchTest, RationalSuiteHasNoViolations) {
  std::vector<BenchInstance> suite;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    suite.push_back({"g" + std::to_string(seed),
                     pdcover::testing::RandomGraph(seed, 20, 60, 2 + seed % 3)});
  }
  const auto rows = RunBench(suite, {Epsilon::Parse("0.01"), Epsilon::Parse("0.3")},
                             NumericMode::kRational);
  EXPECT_EQ(rows.size(), 40u);
  for (const BenchRow& row : rows) EXPECT_TRUE(row.within_bounds()) << row.instance;
}

}  // namespace
}  // namespace pdcover::io
