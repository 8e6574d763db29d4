// Copyright 2026 The lidetect Authors
//
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

#ifndef LIDETECT_OFFICIAL_HPP_
#define LIDETECT_OFFICIAL_HPP_

#include <string>

#include "lidetect/registry.hpp"

namespace lidetect::official {

enum class MatchKind { kExactOfficial, kContainsOfficial, kNoMatch };

struct MatchResult {
  MatchKind kind = MatchKind::kNoMatch;
  std::string spdx_id;       // set for exact/contains
  std::string residual_text; // input minus the matched official span
};

// Compares `text` against every canonical text in the db. Comparison is
// word-based, case-folded, with digit runs masked and copyright-holder lines
// ("Copyright (c) ...") excluded, so template fields never break a match.
// Exact equality wins; otherwise a contiguous window covering >= 95% of a
// canonical text yields ContainsOfficial with the leftover text as residual.
MatchResult match_official(const std::string& text, const registry::SpdxDb& db);

}  // namespace lidetect::official

#endif  // LIDETECT_OFFICIAL_HPP_
