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

#include "pdcover/certificates.hpp"

#include <algorithm>
#include <string>

#include "pdcover/error.hpp"

namespace pdcover {

namespace {

void RequireTotalized(const Hypergraph& h, std::span<const Rational> p) {
  if (p.size() != h.num_edges()) {
    throw Error(ErrorCode::kInvalidInputs,
                "packing has " + std::to_string(p.size()) + " values for " +
                    std::to_string(h.num_edges()) + " edges");
  }
}

Rational VertexSlack(const Hypergraph& h, VertexId v, Tolerance tol) {
  if (tol.relative == 0.0) return 0;
  return Rational(tol.relative) * h.weight(v);
}

Rational AggregateSlack(const Hypergraph& h, Tolerance tol) {
  if (tol.relative == 0.0) return 0;
  return Rational(tol.relative) * h.total_weight();
}

Rational Sum(std::span<const Rational> values) {
  Rational total = 0;
  for (const Rational& x : values) total += x;
  return total;
}

}  // namespace

std::vector<Rational> ChargedWeights(const Hypergraph& h,
                                     std::span<const Rational> p) {
  RequireTotalized(h, p);
  std::vector<Rational> charged(h.num_vertices());
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    for (EdgeId e : h.incident_edges(v)) charged[v] += p[e];
  }
  return charged;
}

PackingCheck VerifyPacking(const Hypergraph& h, std::span<const Rational> p,
                           Tolerance tol) {
  RequireTotalized(h, p);
  for (EdgeId e = 0; e < p.size(); ++e) {
    if (p[e] < 0) {
      throw Error(ErrorCode::kNegativePackingValue,
                  "p(" + std::to_string(e) + ") = " + FormatRational(p[e]));
    }
  }
  PackingCheck check;
  const std::vector<Rational> charged = ChargedWeights(h, p);
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (charged[v] > h.weight(v) + VertexSlack(h, v, tol)) {
      check.violations.push_back(v);
    }
  }
  check.feasible = check.violations.empty();
  return check;
}

CoverCheck VerifyCover(const Hypergraph& h, std::span<const VertexId> cover) {
  std::vector<char> in_cover(h.num_vertices(), 0);
  for (VertexId v : cover) {
    if (v >= h.num_vertices()) {
      throw Error(ErrorCode::kUnknownVertex, "vertex " + std::to_string(v));
    }
    in_cover[v] = 1;
  }
  CoverCheck check;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const auto pins = h.pins(e);
    if (std::none_of(pins.begin(), pins.end(),
                     [&](VertexId v) { return in_cover[v] != 0; })) {
      check.uncovered.push_back(e);
    }
  }
  check.is_cover = check.uncovered.empty();
  return check;
}

EpsMaximalCheck VerifyEpsMaximal(const Hypergraph& h,
                                 std::span<const Rational> p,
                                 const Epsilon& eps, Tolerance tol) {
  const std::vector<Rational> charged = ChargedWeights(h, p);
  const Rational keep = Rational(1) - eps.exact();
  EpsMaximalCheck check;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (charged[v] + VertexSlack(h, v, tol) >= keep * h.weight(v)) {
      check.tight_set.push_back(v);
    }
  }
  CoverCheck cover = VerifyCover(h, check.tight_set);
  check.eps_maximal = cover.is_cover;
  check.uncovered = std::move(cover.uncovered);
  return check;
}

DualityCheck CheckDuality(const Hypergraph& h, std::span<const VertexId> cover,
                          std::span<const Rational> p, Tolerance tol) {
  if (!VerifyCover(h, cover).is_cover) {
    throw Error(ErrorCode::kInvalidInputs, "not a vertex cover");
  }
  if (!VerifyPacking(h, p, tol).feasible) {
    throw Error(ErrorCode::kInvalidInputs, "not a feasible packing");
  }
  std::vector<char> in_cover(h.num_vertices(), 0);
  for (VertexId v : cover) in_cover[v] = 1;

  DualityCheck check;
  check.packing_weight = Sum(p);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    std::size_t hits = 0;
    for (VertexId v : h.pins(e)) hits += in_cover[v];
    check.incidence_weighted += Rational(hits) * p[e];
  }
  const std::vector<Rational> charged = ChargedWeights(h, p);
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (!in_cover[v]) continue;
    check.charged_to_cover += charged[v];
    check.cover_weight += h.weight(v);
  }
  check.holds =
      check.packing_weight <= check.cover_weight + AggregateSlack(h, tol);
  return check;
}

CertificateReport Certify(const Hypergraph& h, std::span<const VertexId> cover,
                          std::span<const Rational> p, const Epsilon& eps,
                          Tolerance tol) {
  CertificateReport report;
  PackingCheck packing = VerifyPacking(h, p, tol);
  report.packing_feasible = packing.feasible;
  report.packing_violations = std::move(packing.violations);
  CoverCheck covered = VerifyCover(h, cover);
  report.is_cover = covered.is_cover;
  report.uncovered = std::move(covered.uncovered);

  const std::vector<Rational> charged = ChargedWeights(h, p);
  const Rational keep = Rational(1) - eps.exact();
  report.cover_in_tight_set = true;
  Rational cover_weight = 0;
  for (VertexId v : cover) {
    cover_weight += h.weight(v);
    if (charged[v] + VertexSlack(h, v, tol) < keep * h.weight(v)) {
      report.cover_in_tight_set = false;
    }
  }
  report.eps_maximal = VerifyEpsMaximal(h, p, eps, tol).eps_maximal;

  const Rational packing_weight = Sum(p);
  const Rational slack = AggregateSlack(h, tol);
  report.duality_gap = cover_weight - packing_weight;
  report.duality_holds = report.is_cover && report.packing_feasible &&
                         packing_weight <= cover_weight + slack;
  const std::size_t r = h.stats().r;
  report.slackness_lhs = keep * cover_weight;
  report.slackness_rhs = Rational(r) * packing_weight;
  report.slackness_holds = report.slackness_lhs <= report.slackness_rhs + slack;
  report.ratio_bound =
      static_cast<double>(r) / ToDouble(Rational(Rational(1) - eps.exact()));
  return report;
}

CertificateReport CheckSlackness(const Hypergraph& h,
                                 std::span<const Rational> p,
                                 const Epsilon& eps, Tolerance tol) {
  if (!VerifyPacking(h, p, tol).feasible) {
    throw Error(ErrorCode::kInvalidInputs, "not a feasible packing");
  }
  const EpsMaximalCheck maximal = VerifyEpsMaximal(h, p, eps, tol);
  if (!maximal.eps_maximal) {
    throw Error(ErrorCode::kNotEpsMaximal,
                std::to_string(maximal.uncovered.size()) +
                    " edges miss C_p");
  }
  return Certify(h, maximal.tight_set, p, eps, tol);
}

bool CheckIntegerTightening(const Hypergraph& h, const Rational& cover_weight,
                            const Rational& opt_weight, const Epsilon& eps) {
  if (!h.has_integer_weights()) {
    throw Error(ErrorCode::kNonIntegerWeights, "integer weights required");
  }
  if (eps.exact() * h.total_weight() >= 1) {
    throw Error(ErrorCode::kEpsTooLarge,
                "eps = " + eps.ToString() + " is not below 1/w(V) = 1/" +
                    FormatRational(h.total_weight()));
  }
  return cover_weight <= Rational(h.stats().r) * opt_weight;
}

}  // namespace pdcover
