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

#ifndef LIDETECT_TERMS_HPP_
#define LIDETECT_TERMS_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace lidetect {

// The canonical catalog of license terms. Ids 0-10 are rights, 11-22 are
// obligations; every summary vector, BIO label and compatibility check is
// indexed by these ids.
inline constexpr int kNumTerms = 23;
inline constexpr int kFirstObligation = 11;

enum class TermCategory { kRight, kObligation };

struct TermInfo {
  int id;
  std::string_view name;
  TermCategory category;
};

const std::array<TermInfo, kNumTerms>& term_catalog();

const TermInfo& term_info(int id);

// Case-insensitive lookup by name ("Give Credit") or decimal id ("17").
std::optional<int> term_by_name(std::string_view name);

inline TermCategory term_category(int id) {
  return id < kFirstObligation ? TermCategory::kRight
                               : TermCategory::kObligation;
}

}  // namespace lidetect

#endif  // LIDETECT_TERMS_HPP_
