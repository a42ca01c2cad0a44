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

#include <algorithm>
#include <random>

#include "pdcover/certificates.hpp"
#include "pdcover/cover.hpp"
#include "pdcover/error.hpp"
#include "pdcover/reference.hpp"
#include "test_util.hpp"

namespace pdcover {
namespace {

using testing::PathABC;
using testing::RandomGraph;
using testing::SingleEdge12;
using testing::Star3;
using testing::Triangle;

template <class Fn>
ErrorCode CodeOf(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no pdcover::Error thrown";
  return ErrorCode::kInvalidInputs;
}

std::vector<Rational> Uniform(std::size_t m, Rational value) {
  return std::vector<Rational>(m, value);
}

TEST(VerifyPackingTest, Triangle) {
  const Hypergraph h = Triangle();
  EXPECT_TRUE(VerifyPacking(h, Uniform(3, Rational(1, 2))).feasible);
  const PackingCheck over = VerifyPacking(h, Uniform(3, Rational(3, 5)));
  EXPECT_FALSE(over.feasible);
  EXPECT_EQ(over.violations, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_TRUE(VerifyPacking(h, Uniform(3, Rational(0))).feasible);
  EXPECT_EQ(CodeOf([&] { VerifyPacking(h, Uniform(3, Rational(-1))); }),
            ErrorCode::kNegativePackingValue);
}

TEST(VerifyPackingTest, ToleranceAbsorbsRoundoff) {
  const Hypergraph h = Triangle();
  const auto p = Uniform(3, Rational(1, 2) + Rational(1, 1000000000000LL));
  EXPECT_FALSE(VerifyPacking(h, p).feasible);
  EXPECT_TRUE(VerifyPacking(h, p, Tolerance{1e-9}).feasible);
}

TEST(VerifyCoverTest, Triangle) {
  const Hypergraph h = Triangle();
  EXPECT_TRUE(VerifyCover(h, std::vector<VertexId>{0, 1}).is_cover);
  const CoverCheck partial = VerifyCover(h, std::vector<VertexId>{0});
  EXPECT_FALSE(partial.is_cover);
  EXPECT_EQ(partial.uncovered, (std::vector<EdgeId>{1}));
  EXPECT_TRUE(VerifyCover(h, std::vector<VertexId>{0, 1, 2}).is_cover);
  EXPECT_EQ(CodeOf([&] { VerifyCover(h, std::vector<VertexId>{3}); }),
            ErrorCode::kUnknownVertex);
}

TEST(VerifyEpsMaximalTest, Examples) {
  const Hypergraph h = Triangle();
  EXPECT_FALSE(VerifyEpsMaximal(h, Uniform(3, Rational(0)), Epsilon::Parse("0.5")).eps_maximal);
  for (const char* eps : {"0.001", "0.5", "0.999"}) {
    const EpsMaximalCheck c = VerifyEpsMaximal(h, Uniform(3, Rational(1, 2)), Epsilon::Parse(eps));
    EXPECT_TRUE(c.eps_maximal);
    EXPECT_EQ(c.tight_set, (std::vector<VertexId>{0, 1, 2}));
  }
}

TEST(VerifyEpsMaximalTest, EngineOutputAllModes) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Hypergraph h = RandomGraph(seed, 6 + seed % 10, 8 + seed % 25, 2 + seed % 3);
    for (NumericMode mode : {NumericMode::kFloat64, NumericMode::kRational,
                             NumericMode::kScaledInteger}) {
      const Epsilon eps = Epsilon::Parse("0.15");
      const CoverResult r = RunCover(h, eps, mode);
      const EpsMaximalCheck c = VerifyEpsMaximal(h, r.packing, eps, Tolerance::ForMode(mode));
      EXPECT_TRUE(c.eps_maximal);
      if (mode != NumericMode::kFloat64) {
        EXPECT_EQ(c.tight_set, r.SortedCover());
      }
    }
  }
}

TEST(CheckDualityTest, Examples) {
  const Hypergraph h = Triangle();
  const DualityCheck d =
      CheckDuality(h, std::vector<VertexId>{0, 1}, Uniform(3, Rational(1, 2)));
  EXPECT_TRUE(d.holds);
  EXPECT_EQ(d.packing_weight, Rational(3, 2));
  EXPECT_EQ(d.cover_weight, Rational(2));
  EXPECT_TRUE(CheckDuality(h, std::vector<VertexId>{1, 2}, Uniform(3, Rational(0))).holds);

  const DualityCheck tight = CheckDuality(SingleEdge12(), std::vector<VertexId>{0},
                                          Uniform(1, Rational(1)));
  EXPECT_TRUE(tight.holds);
  EXPECT_EQ(tight.packing_weight, tight.cover_weight);

  EXPECT_EQ(CodeOf([&] { CheckDuality(h, std::vector<VertexId>{0}, Uniform(3, Rational(0))); }),
            ErrorCode::kInvalidInputs);
  EXPECT_EQ(CodeOf([&] {
              CheckDuality(h, std::vector<VertexId>{0, 1}, Uniform(3, Rational(1)));
            }),
            ErrorCode::kInvalidInputs);
}

TEST(CheckDualityTest, ChainMiddleTermsAreEqual) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Hypergraph h = RandomGraph(seed, 10, 20, 4);
    const BaselineResult base = BarYehudaEven(h);
    // Random sub-packing of a feasible packing, against a random superset of
    // a cover.
    std::vector<Rational> p = base.packing;
    for (auto& x : p) x *= Rational(rng() % 4, 3 + rng() % 2);
    std::vector<VertexId> cover = base.cover;
    for (VertexId v = 0; v < h.num_vertices(); ++v) {
      if (rng() % 3 == 0 &&
          std::find(cover.begin(), cover.end(), v) == cover.end()) {
        cover.push_back(v);
      }
    }
    const DualityCheck d = CheckDuality(h, cover, p);
    EXPECT_TRUE(d.holds);
    EXPECT_EQ(d.incidence_weighted, d.charged_to_cover);
    EXPECT_LE(d.packing_weight, d.incidence_weighted);
    EXPECT_LE(d.charged_to_cover, d.cover_weight);
  }
}

TEST(CheckSlacknessTest, Examples) {
  const CertificateReport t =
      CheckSlackness(Triangle(), Uniform(3, Rational(1, 2)), Epsilon::Parse("0.1"));
  EXPECT_EQ(t.slackness_lhs, Rational(27, 10));
  EXPECT_EQ(t.slackness_rhs, Rational(3));
  EXPECT_TRUE(t.slackness_holds);
  EXPECT_TRUE(t.passed());
  EXPECT_NEAR(t.ratio_bound, 2.0 / 0.9, 1e-12);

  // p(e) = 1 on the single edge with weights (1, 2): both vertices reach
  // (1 - 0.5) w(v), so C_p = {0, 1}.
  const CertificateReport s =
      CheckSlackness(SingleEdge12(), Uniform(1, Rational(1)), Epsilon::Parse("0.5"));
  EXPECT_EQ(s.slackness_lhs, Rational(3, 2));
  EXPECT_EQ(s.slackness_rhs, Rational(2));
  EXPECT_TRUE(s.slackness_holds);

  EXPECT_EQ(CodeOf([] {
              CheckSlackness(Triangle(), Uniform(3, Rational(0)), Epsilon::Parse("0.5"));
            }),
            ErrorCode::kNotEpsMaximal);
}

TEST(CheckSlacknessTest, HoldsForHandMadeEpsMaximalPackings) {
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Hypergraph h = RandomGraph(seed + 300, 12, 25, 2 + seed % 4);
    const Rational eps_value(1 + rng() % 9, 10);
    const Epsilon eps(eps_value);
    // Shrinking a maximal packing by any factor in [1 - eps, 1] keeps every
    // tight vertex in C_p, so the result is eps-maximal.
    const BaselineResult base = BarYehudaEven(h);
    const Rational shrink = Rational(1) - eps_value * Rational(rng() % 5, 4);
    std::vector<Rational> p = base.packing;
    for (auto& x : p) x *= shrink;
    const CertificateReport c = CheckSlackness(h, p, eps);
    EXPECT_TRUE(c.slackness_holds);
    EXPECT_TRUE(c.passed());
  }
}

TEST(CertifyTest, EngineOutputPassesExactly) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Hypergraph h = RandomGraph(seed + 70, 12, 30, 3);
    const Epsilon eps = Epsilon::Parse("0.05");
    const CoverResult r = RunCover(h, eps, NumericMode::kRational);
    const CertificateReport c = Certify(h, r.cover, r.packing, eps);
    EXPECT_TRUE(c.passed());
    EXPECT_GE(c.duality_gap, 0);
  }
}

TEST(CertifyTest, FlagsBrokenSolutions) {
  const Hypergraph h = Triangle();
  const Epsilon eps = Epsilon::Parse("0.1");
  const CertificateReport missing =
      Certify(h, std::vector<VertexId>{0}, Uniform(3, Rational(1, 2)), eps);
  EXPECT_FALSE(missing.is_cover);
  EXPECT_FALSE(missing.passed());
  const CertificateReport heavy =
      Certify(h, std::vector<VertexId>{0, 1, 2}, Uniform(3, Rational(3, 5)), eps);
  EXPECT_FALSE(heavy.packing_feasible);
  EXPECT_FALSE(heavy.passed());
  const CertificateReport loose =
      Certify(h, std::vector<VertexId>{0, 1}, Uniform(3, Rational(1, 4)), eps);
  EXPECT_FALSE(loose.cover_in_tight_set);
  EXPECT_FALSE(loose.passed());
}

TEST(IntegerTighteningTest, Examples) {
  const Hypergraph t = Triangle();
  const CoverResult tr = RunCover(t, Epsilon::Parse("0.3"), NumericMode::kRational);
  EXPECT_EQ(tr.cover_weight, Rational(3));
  EXPECT_EQ(BruteForceMinCover(t).opt_weight, Rational(2));
  EXPECT_TRUE(CheckIntegerTightening(t, tr.cover_weight, Rational(2), Epsilon::Parse("0.3")));

  const CoverResult er = RunCover(SingleEdge12(), Epsilon::Parse("0.2"), NumericMode::kRational);
  EXPECT_EQ(er.cover_weight, Rational(1));
  EXPECT_TRUE(CheckIntegerTightening(SingleEdge12(), er.cover_weight, Rational(1),
                                     Epsilon::Parse("0.2")));

  EXPECT_EQ(CodeOf([&] {
              CheckIntegerTightening(t, Rational(3), Rational(2), Epsilon::Ratio(1, 3));
            }),
            ErrorCode::kEpsTooLarge);
  EXPECT_FALSE(CheckIntegerTightening(t, Rational(5), Rational(2), Epsilon::Parse("0.3")));
}

TEST(BruteForceTest, Examples) {
  const OracleResult t = BruteForceMinCover(Triangle());
  EXPECT_EQ(t.opt_weight, Rational(2));
  EXPECT_EQ(t.opt_cover, (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(t.subsets_searched, 8u);
  const OracleResult p = BruteForceMinCover(PathABC());
  EXPECT_EQ(p.opt_weight, Rational(1));
  EXPECT_EQ(p.opt_cover, (std::vector<VertexId>{1}));
  const OracleResult s = BruteForceMinCover(Star3());
  EXPECT_EQ(s.opt_weight, Rational(2));
  EXPECT_EQ(s.opt_cover, (std::vector<VertexId>{0}));
}

TEST(BruteForceTest, LexicographicTieBreak) {
  // 4-cycle: {0, 2} and {1, 3} both weigh 2.
  const Hypergraph c4 = BuildHypergraph(std::vector<std::int64_t>{1, 1, 1, 1},
                                        {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(BruteForceMinCover(c4).opt_cover, (std::vector<VertexId>{0, 2}));
  // The only optima are {0, 3} and {1, 2}. The second has the smaller mask.
  const Hypergraph g = BuildHypergraph(std::vector<std::int64_t>{1, 1, 1, 1},
                                       {{0, 1}, {2, 3}, {0, 2}, {1, 3}});
  EXPECT_EQ(BruteForceMinCover(g).opt_cover, (std::vector<VertexId>{0, 3}));
}

TEST(BruteForceTest, AgreesWithBranchingSearch) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Hypergraph h = RandomGraph(seed + 1000, 4 + seed % 13, 5 + seed % 30, 2 + seed % 3);
    const OracleResult o = BruteForceMinCover(h);
    EXPECT_EQ(o.opt_weight, testing::BranchingMinCoverWeight(h)) << "seed " << seed;
    EXPECT_TRUE(VerifyCover(h, o.opt_cover).is_cover);
  }
}

TEST(BruteForceTest, FractionalWeights) {
  const Hypergraph h = BuildHypergraph(
      std::vector<Rational>{Rational(1, 3), Rational(1, 2), Rational(1, 4)},
      {{0, 1}, {1, 2}});
  const OracleResult o = BruteForceMinCover(h);
  EXPECT_EQ(o.opt_weight, Rational(1, 2));
  EXPECT_EQ(o.opt_cover, (std::vector<VertexId>{1}));
}

TEST(BruteForceTest, RejectsLargeInstances) {
  const Hypergraph h = RandomGraph(1, 25, 10, 2);
  EXPECT_EQ(CodeOf([&] { BruteForceMinCover(h); }), ErrorCode::kTooLarge);
}

TEST(BarYehudaEvenTest, Examples) {
  const BaselineResult p = BarYehudaEven(PathABC());
  EXPECT_EQ(p.packing, (std::vector<Rational>{Rational(1), Rational(0)}));
  EXPECT_EQ(p.cover, (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(p.cover_weight, Rational(2));

  const BaselineResult e = BarYehudaEven(SingleEdge12());
  EXPECT_EQ(e.packing, (std::vector<Rational>{Rational(1)}));
  EXPECT_EQ(e.cover, (std::vector<VertexId>{0}));

  const BaselineResult empty =
      BarYehudaEven(BuildHypergraph(std::vector<std::int64_t>{1, 2}, {}));
  EXPECT_TRUE(empty.cover.empty());
  EXPECT_TRUE(empty.packing.empty());
}

TEST(BarYehudaEvenTest, MaximalAndWithinRankOfOptimum) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Hypergraph h = RandomGraph(seed + 2000, 5 + seed % 12, 6 + seed % 30, 2 + seed % 3);
    const BaselineResult b = BarYehudaEven(h);
    EXPECT_TRUE(VerifyPacking(h, b.packing).feasible);
    const auto charged = ChargedWeights(h, b.packing);
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      bool tight = false;
      for (VertexId v : h.pins(e)) tight = tight || charged[v] == h.weight(v);
      EXPECT_TRUE(tight) << "edge " << e;
    }
    const OracleResult o = BruteForceMinCover(h);
    EXPECT_LE(b.cover_weight, Rational(h.stats().r) * o.opt_weight);
    EXPECT_LE(o.opt_weight, b.cover_weight);
  }
}

}  // namespace
}  // namespace pdcover
