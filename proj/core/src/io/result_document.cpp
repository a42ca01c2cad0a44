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

#include "pdcover/io/result_document.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "json.hpp"

#include "pdcover/error.hpp"
#include "pdcover/set_cover.hpp"

namespace pdcover::io {

namespace {

using Json = nlohmann::ordered_json;

Json Number(const Rational& value) {
  return Json{{"value", ToDouble(value)}, {"exact", FormatRational(value)}};
}

Json CertificateJson(const CertificateReport& c) {
  return Json{
      {"passed", c.passed()},
      {"packing_feasible", c.packing_feasible},
      {"packing_violations", c.packing_violations},
      {"is_cover", c.is_cover},
      {"uncovered", c.uncovered},
      {"eps_maximal", c.eps_maximal},
      {"cover_in_tight_set", c.cover_in_tight_set},
      {"duality_holds", c.duality_holds},
      {"duality_gap", Number(c.duality_gap)},
      {"slackness_holds", c.slackness_holds},
      {"slackness_lhs", Number(c.slackness_lhs)},
      {"slackness_rhs", Number(c.slackness_rhs)},
      {"ratio_bound", c.ratio_bound},
  };
}

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kInvalidInputs, "result document: " + what);
}

}  // namespace

std::string RenderResultDocument(const ParsedInstance& instance,
                                 const CoverResult& result,
                                 const CertificateReport& certificate,
                                 const std::optional<OracleResult>& oracle) {
  const bool sc = instance.is_set_cover();
  std::vector<std::uint32_t> cover(result.cover.begin(), result.cover.end());
  std::vector<Rational> packing = result.packing;
  if (sc) {
    cover = CoverToSetSolution(instance.set_cover(), result.cover);
    packing = PackingToElementSolution(instance.set_cover(), result.packing);
  }

  Json doc;
  doc["schema"] = kResultSchemaVersion;
  doc["instance"] = Json{{"kind", sc ? "sc" : "hg"},
                         {"n", result.stats.n},
                         {"m", result.stats.m},
                         {"r", result.stats.r},
                         {"M", result.stats.M}};
  doc["mode"] = std::string(NumericModeName(result.mode));
  doc["eps"] = result.eps.ToString();
  doc["cover"] = cover;
  doc["cover_weight"] = Number(result.cover_weight);
  Json values = Json::array();
  for (const Rational& x : packing) values.push_back(Number(x));
  doc["packing"] = std::move(values);
  doc["packing_weight"] = Number(result.packing_weight);
  doc["rounds"] = result.rounds;

  Json reports = Json::array();
  const std::size_t shown = std::min(result.reports.size(), kMaxReportedRounds);
  for (std::size_t i = 0; i < shown; ++i) {
    const RoundReport& r = result.reports[i];
    reports.push_back(Json{{"round", r.round},
                           {"edges_at_start", r.edges_at_start},
                           {"edges_at_end", r.edges_at_end},
                           {"phi_before", r.phi_before},
                           {"phi_after", r.phi_after},
                           {"good_edge_fraction", r.good_edge_fraction},
                           {"deleted", r.deleted_this_round}});
  }
  doc["round_reports"] = std::move(reports);
  doc["round_reports_truncated"] = result.reports.size() > kMaxReportedRounds;
  doc["scale_factor"] = result.scale_factor.str();
  doc["certificate"] = CertificateJson(certificate);
  doc["bounds"] = Json{
      {"round_bound", result.bounds.rounds},
      {"rounds_within_bound",
       static_cast<double>(result.rounds) <= result.bounds.rounds},
      {"work_bound", result.bounds.work},
      {"work", result.work},
      {"work_within_bound",
       static_cast<double>(result.work) <= result.bounds.work},
      {"touches", result.touches},
  };
  if (oracle) {
    std::vector<std::uint32_t> opt(oracle->opt_cover.begin(),
                                   oracle->opt_cover.end());
    if (sc) opt = CoverToSetSolution(instance.set_cover(), oracle->opt_cover);
    doc["oracle"] = Json{
        {"opt_cover", opt},
        {"opt_weight", Number(oracle->opt_weight)},
        {"ratio", ToDouble(Rational(result.cover_weight / oracle->opt_weight))},
    };
  }
  return doc.dump(2) + "\n";
}

Reverification ReverifyResultDocument(const ParsedInstance& instance,
                                      std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::exception& e) {
    Malformed(e.what());
  }
  try {
    if (doc.at("schema").get<int>() != kResultSchemaVersion) {
      Malformed("unsupported schema");
    }
    const bool sc = doc.at("instance").at("kind").get<std::string>() == "sc";
    if (sc != instance.is_set_cover()) Malformed("instance kind mismatch");
    const Hypergraph& h = instance.hypergraph();
    if (doc.at("instance").at("m").get<std::size_t>() != h.num_edges() ||
        doc.at("instance").at("n").get<std::size_t>() != h.num_vertices()) {
      Malformed("instance size mismatch");
    }
    const auto mode = ParseNumericMode(doc.at("mode").get<std::string>());
    if (!mode) Malformed("unknown mode");
    const Epsilon eps = Epsilon::Parse(doc.at("eps").get<std::string>());

    std::vector<VertexId> cover;
    for (const auto& id : doc.at("cover")) {
      const auto x = id.get<std::uint32_t>();
      if (sc) {
        if (x >= instance.set_cover().num_sets()) Malformed("unknown set id");
        cover.push_back(instance.set_cover().vertex_of_set(x));
      } else {
        cover.push_back(x);
      }
    }
    const auto& values = doc.at("packing");
    if (values.size() != h.num_edges()) Malformed("packing length mismatch");
    std::vector<Rational> packing(h.num_edges());
    for (std::size_t i = 0; i < values.size(); ++i) {
      const auto exact = ParseRational(values[i].at("exact").get<std::string>());
      if (!exact) Malformed("bad packing value");
      const EdgeId e = sc ? instance.set_cover().edge_of_element(
                                static_cast<ElementId>(i))
                          : static_cast<EdgeId>(i);
      packing[e] = *exact;
    }

    Reverification out;
    out.recomputed = Certify(h, cover, packing, eps, Tolerance::ForMode(*mode));
    const Json& stored = doc.at("certificate");
    out.stored_passed = stored.at("passed").get<bool>();
    const CertificateReport& c = out.recomputed;
    out.verdicts_match =
        stored.at("passed").get<bool>() == c.passed() &&
        stored.at("packing_feasible").get<bool>() == c.packing_feasible &&
        stored.at("is_cover").get<bool>() == c.is_cover &&
        stored.at("eps_maximal").get<bool>() == c.eps_maximal &&
        stored.at("cover_in_tight_set").get<bool>() == c.cover_in_tight_set &&
        stored.at("duality_holds").get<bool>() == c.duality_holds &&
        stored.at("slackness_holds").get<bool>() == c.slackness_holds;
    return out;
  } catch (const Json::exception& e) {
    Malformed(e.what());
  }
}

}  // namespace pdcover::io
