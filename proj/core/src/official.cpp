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

#include "lidetect/official.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "lidetect/util.hpp"

namespace lidetect::official {

namespace {

struct Word {
  std::string form;       // lowercased, digit runs masked to "0"
  std::size_t begin = 0;  // byte offsets into the source text
  std::size_t end = 0;
};

bool is_copyright_line(std::string_view line) {
  std::string t = to_lower(trim(line));
  return t.rfind("copyright", 0) == 0 || t.rfind("(c)", 0) == 0;
}

// Word sequence used for comparison; punctuation is dropped and
// copyright-holder lines are skipped wholesale.
std::vector<Word> comparison_words(const std::string& text) {
  std::vector<Word> words;
  std::size_t line_start = 0;
  while (line_start < text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string::npos) line_end = text.size();
    std::string_view line(text.data() + line_start, line_end - line_start);
    if (!is_copyright_line(line)) {
      std::size_t i = line_start;
      while (i < line_end) {
        if (!is_word_char(text[i])) {
          ++i;
          continue;
        }
        std::size_t b = i;
        while (i < line_end && is_word_char(text[i])) ++i;
        Word w;
        w.begin = b;
        w.end = i;
        std::string surface = to_lower(text.substr(b, i - b));
        bool all_digits = !surface.empty();
        for (char c : surface) {
          if (!is_ascii_digit(c)) {
            all_digits = false;
            break;
          }
        }
        w.form = all_digits ? "0" : surface;
        words.push_back(std::move(w));
      }
    }
    line_start = line_end + 1;
  }
  return words;
}

bool window_equals(const std::vector<Word>& haystack, std::size_t offset,
                   const std::vector<Word>& needle, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if (haystack[offset + i].form != needle[i].form) return false;
  }
  return true;
}

// Finds `needle[0..len)` as a contiguous window in `haystack`.
std::optional<std::size_t> find_window(const std::vector<Word>& haystack,
                                       const std::vector<Word>& needle,
                                       std::size_t len) {
  if (len == 0 || haystack.size() < len) return std::nullopt;
  for (std::size_t off = 0; off + len <= haystack.size(); ++off) {
    if (window_equals(haystack, off, needle, len)) return off;
  }
  return std::nullopt;
}

std::string residual_from(const std::string& text,
                          const std::vector<Word>& words, std::size_t win_begin,
                          std::size_t win_len) {
  std::string out;
  if (win_begin > 0) {
    std::size_t end = words[win_begin].begin;
    out += trim(text.substr(0, end));
  }
  std::size_t last = win_begin + win_len;
  if (last < words.size()) {
    std::size_t begin = words[win_len + win_begin - 1].end;
    std::string tail = trim(text.substr(begin));
    if (!out.empty() && !tail.empty()) out += "\n";
    out += tail;
  }
  return out;
}

}  // namespace

MatchResult match_official(const std::string& text,
                           const registry::SpdxDb& db) {
  MatchResult result;
  if (db.empty_db()) return result;
  std::string folded = fold_text(text);
  std::vector<Word> input = comparison_words(folded);
  if (input.empty()) return result;

  // Longest canonical first so the most specific license wins.
  std::vector<const registry::SpdxEntry*> order;
  std::vector<std::vector<Word>> canon_words;
  for (const auto& e : db.entries()) order.push_back(&e);
  std::stable_sort(order.begin(), order.end(),
                   [](const registry::SpdxEntry* a,
                      const registry::SpdxEntry* b) {
                     if (a->canonical_text.size() != b->canonical_text.size()) {
                       return a->canonical_text.size() >
                              b->canonical_text.size();
                     }
                     return a->id < b->id;
                   });

  for (const registry::SpdxEntry* entry : order) {
    std::vector<Word> canon = comparison_words(entry->canonical_text);
    if (canon.empty()) continue;
    if (canon.size() == input.size() &&
        window_equals(input, 0, canon, canon.size())) {
      result.kind = MatchKind::kExactOfficial;
      result.spdx_id = entry->id;
      result.residual_text.clear();
      return result;
    }
  }
  for (const registry::SpdxEntry* entry : order) {
    std::vector<Word> canon = comparison_words(entry->canonical_text);
    if (canon.empty() || canon.size() > input.size()) continue;
    std::size_t min_len = static_cast<std::size_t>(
        std::ceil(0.95 * static_cast<double>(canon.size())));
    if (min_len == 0) min_len = 1;
    for (std::size_t len = canon.size(); len >= min_len; --len) {
      if (auto off = find_window(input, canon, len)) {
        result.kind = MatchKind::kContainsOfficial;
        result.spdx_id = entry->id;
        result.residual_text = residual_from(folded, input, *off, len);
        return result;
      }
      if (len == 0) break;
    }
  }
  return result;
}

}  // namespace lidetect::official
