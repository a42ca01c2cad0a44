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

#ifndef PDCOVER_CERTIFICATES_HPP_
#define PDCOVER_CERTIFICATES_HPP_

#include <span>
#include <vector>

#include "pdcover/hypergraph.hpp"
#include "pdcover/numeric.hpp"

namespace pdcover {

// Slack allowed in certificate inequalities. Zero means exact. Otherwise a
// per-vertex inequality may be off by relative * w(v) and an aggregate one by
// relative * w(V).
struct Tolerance {
  double relative = 0.0;

  static Tolerance Exact() { return {}; }
  static Tolerance ForMode(NumericMode mode) {
    return mode == NumericMode::kFloat64 ? Tolerance{1e-9} : Tolerance{};
  }
};

struct PackingCheck {
  bool feasible = true;
  std::vector<VertexId> violations;  // p(E(v)) > w(v)
};

struct CoverCheck {
  bool is_cover = true;
  std::vector<EdgeId> uncovered;
};

struct EpsMaximalCheck {
  bool eps_maximal = false;
  // C_p = { v : p(E(v)) >= (1 - eps) w(v) }, ascending.
  std::vector<VertexId> tight_set;
  std::vector<EdgeId> uncovered;
};

struct DualityCheck {
  bool holds = false;
  Rational packing_weight;  // p(E)
  Rational cover_weight;    // w(C)
  // The two middle terms of the weak-duality chain:
  // sum_e |e n C| p(e) and sum_{v in C} p(E(v)). They are equal by an
  // exchange of summation.
  Rational incidence_weighted;
  Rational charged_to_cover;
};

struct CertificateReport {
  bool packing_feasible = false;
  std::vector<VertexId> packing_violations;
  bool is_cover = false;
  std::vector<EdgeId> uncovered;
  bool eps_maximal = false;
  // Every cover vertex satisfies p(E(v)) >= (1 - eps) w(v).
  bool cover_in_tight_set = false;
  bool duality_holds = false;
  Rational duality_gap;  // w(C) - p(E)
  bool slackness_holds = false;
  Rational slackness_lhs;  // (1 - eps) w(C)
  Rational slackness_rhs;  // r p(E)
  double ratio_bound = 0.0;  // r / (1 - eps)

  bool passed() const {
    return packing_feasible && is_cover && eps_maximal && cover_in_tight_set &&
           duality_holds && slackness_holds;
  }
};

// p(E(v)) for every vertex, exactly.
std::vector<Rational> ChargedWeights(const Hypergraph& h,
                                     std::span<const Rational> p);

// Throws kNegativePackingValue, or kInvalidInputs when |p| != m.
PackingCheck VerifyPacking(const Hypergraph& h, std::span<const Rational> p,
                           Tolerance tol = {});

// Throws kUnknownVertex for ids outside V.
CoverCheck VerifyCover(const Hypergraph& h, std::span<const VertexId> cover);

EpsMaximalCheck VerifyEpsMaximal(const Hypergraph& h,
                                 std::span<const Rational> p,
                                 const Epsilon& eps, Tolerance tol = {});

// Weak duality p(E) <= w(C). Throws kInvalidInputs unless `cover` is a cover
// and `p` a feasible packing.
DualityCheck CheckDuality(const Hypergraph& h, std::span<const VertexId> cover,
                          std::span<const Rational> p, Tolerance tol = {});

// Approximate complementary slackness on C = C_p:
// (1 - eps) w(C) <= r p(E). Throws kNotEpsMaximal when C_p is not a cover
// and kInvalidInputs when p is infeasible.
CertificateReport CheckSlackness(const Hypergraph& h,
                                 std::span<const Rational> p,
                                 const Epsilon& eps, Tolerance tol = {});

// Full, non-throwing report for a (cover, packing) pair such as a solver
// output. Everything is recomputed from the arguments.
CertificateReport Certify(const Hypergraph& h, std::span<const VertexId> cover,
                          std::span<const Rational> p, const Epsilon& eps,
                          Tolerance tol = {});

// With integer weights and eps < 1/w(V), an eps-maximal cover weighs at most
// r times the optimum. Returns cover_weight <= r * opt_weight. Throws
// kEpsTooLarge or kNonIntegerWeights.
bool CheckIntegerTightening(const Hypergraph& h, const Rational& cover_weight,
                            const Rational& opt_weight, const Epsilon& eps);

}  // namespace pdcover

#endif  // PDCOVER_CERTIFICATES_HPP_
