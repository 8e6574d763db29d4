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

#include "lidetect/terms.hpp"

#include <cctype>
#include <stdexcept>

#include "lidetect/util.hpp"

namespace lidetect {

namespace {
constexpr TermCategory kR = TermCategory::kRight;
constexpr TermCategory kO = TermCategory::kObligation;

const std::array<TermInfo, kNumTerms> kCatalog = {{
    {0, "Distribute", kR},
    {1, "Modify", kR},
    {2, "Commercial Use", kR},
    {3, "Relicense", kR},
    {4, "Hold Liable", kR},
    {5, "Use Patent Claims", kR},
    {6, "Sublicense", kR},
    {7, "Statically Link", kR},
    {8, "Private Use", kR},
    {9, "Use Trademark", kR},
    {10, "Place Warranty", kR},
    {11, "Include Copyright", kO},
    {12, "Include License", kO},
    {13, "Include Notice", kO},
    {14, "Disclose Source", kO},
    {15, "State Changes", kO},
    {16, "Include Original", kO},
    {17, "Give Credit", kO},
    {18, "Rename", kO},
    {19, "Contact Author", kO},
    {20, "Include Install Instructions", kO},
    {21, "Compensate for Damages", kO},
    {22, "Pay Above Use Threshold", kO},
}};
}  // namespace

const std::array<TermInfo, kNumTerms>& term_catalog() { return kCatalog; }

const TermInfo& term_info(int id) {
  if (id < 0 || id >= kNumTerms) {
    throw std::out_of_range("term id out of range: " + std::to_string(id));
  }
  return kCatalog[static_cast<std::size_t>(id)];
}

std::optional<int> term_by_name(std::string_view name) {
  std::string needle = to_lower(trim(name));
  if (needle.empty()) return std::nullopt;
  bool all_digits = true;
  for (char c : needle) {
    if (!is_ascii_digit(c)) {
      all_digits = false;
      break;
    }
  }
  if (all_digits) {
    int id = std::stoi(needle);
    if (id >= 0 && id < kNumTerms) return id;
    return std::nullopt;
  }
  for (const TermInfo& t : kCatalog) {
    if (to_lower(t.name) == needle) return t.id;
  }
  return std::nullopt;
}

}  // namespace lidetect
