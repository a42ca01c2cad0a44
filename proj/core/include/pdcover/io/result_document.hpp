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

#ifndef PDCOVER_IO_RESULT_DOCUMENT_HPP_
#define PDCOVER_IO_RESULT_DOCUMENT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "pdcover/certificates.hpp"
#include "pdcover/cover.hpp"
#include "pdcover/io/instance_format.hpp"
#include "pdcover/reference.hpp"

namespace pdcover::io {

inline constexpr int kResultSchemaVersion = 1;
inline constexpr std::size_t kMaxReportedRounds = 10000;

// Renders the JSON result document. Contains no timing, so equal inputs give
// byte-identical output. For set-cover instances the cover lists set ids and
// the packing is per element.
std::string RenderResultDocument(const ParsedInstance& instance,
                                 const CoverResult& result,
                                 const CertificateReport& certificate,
                                 const std::optional<OracleResult>& oracle);

struct Reverification {
  bool verdicts_match = false;
  bool stored_passed = false;
  CertificateReport recomputed;
};

// Reads a result document back, re-runs the certificates against `instance`
// and compares the verdicts. Throws Error(kInvalidInputs) on a malformed or
// mismatched document.
Reverification ReverifyResultDocument(const ParsedInstance& instance,
                                      std::string_view json_text);

}  // namespace pdcover::io

#endif  // PDCOVER_IO_RESULT_DOCUMENT_HPP_
