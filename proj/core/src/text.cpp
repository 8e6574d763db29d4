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

#include "lidetect/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>

#include "lidetect/util.hpp"

namespace lidetect::text {

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool is_double_consonant_end(std::string_view s) {
  if (s.size() < 2) return false;
  char a = s[s.size() - 2];
  char b = s[s.size() - 1];
  if (a != b) return false;
  static const std::string kDoubles = "bdgmnprt";
  return kDoubles.find(a) != std::string::npos;
}

}  // namespace

std::string stem(std::string_view word) {
  std::string w = to_lower(word);
  if (w == "n't") return "not";

  // Step 1: plurals.
  if (ends_with(w, "ies") && w.size() > 4) {
    w.erase(w.size() - 2);  // "warranties" -> "warranti"
  } else if (ends_with(w, "sses")) {
    w.erase(w.size() - 2);
  } else if (ends_with(w, "ss") || ends_with(w, "us") || ends_with(w, "is")) {
    // keep
  } else if (ends_with(w, "s") && w.size() > 3) {
    w.pop_back();
  }
  // Step 2: verbal suffixes, undoubling the final consonant afterwards.
  if (ends_with(w, "ing") && w.size() > 5) {
    w.erase(w.size() - 3);
    if (is_double_consonant_end(w) && w.size() > 3) w.pop_back();
  } else if (ends_with(w, "ed") && w.size() > 4) {
    w.erase(w.size() - 2);
    if (is_double_consonant_end(w) && w.size() > 3) w.pop_back();
  }
  // Step 3: derivational suffixes.
  if (ends_with(w, "ion") && w.size() > 5) {
    w.erase(w.size() - 3);  // "redistribution" -> "redistribut"
  } else if (ends_with(w, "ment") && w.size() > 6) {
    w.erase(w.size() - 4);
  } else if (ends_with(w, "ness") && w.size() > 5) {
    w.erase(w.size() - 4);
  }
  // Step 4: adverbs.
  if (ends_with(w, "ly") && w.size() > 4) w.erase(w.size() - 2);
  // Step 5: silent e.
  if (ends_with(w, "e") && w.size() > 4) w.pop_back();
  // Step 6: trailing y -> i so modify/modification co-stem.
  if (ends_with(w, "y") && w.size() > 3) w.back() = 'i';
  return w;
}

std::vector<Token> normalize_tokens(std::string_view raw) {
  std::vector<Token> tokens;
  auto push = [&](std::string surface) {
    Token t;
    t.stem = stem(surface);
    t.surface = std::move(surface);
    t.position = static_cast<int>(tokens.size());
    tokens.push_back(std::move(t));
  };

  std::size_t i = 0;
  const std::size_t n = raw.size();
  while (i < n) {
    char c = raw[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (is_word_char(c)) {
      std::size_t begin = i;
      while (i < n && is_word_char(raw[i])) ++i;
      std::string word(raw.substr(begin, i - begin));
      // Treebank-style contraction split: "don't" -> "do" + "n't".
      if (i + 1 < n && raw[i] == '\'' &&
          (raw[i + 1] == 't' || raw[i + 1] == 'T') &&
          (i + 2 >= n || !is_word_char(raw[i + 2])) && word.size() > 1 &&
          (word.back() == 'n' || word.back() == 'N')) {
        std::string head = word.substr(0, word.size() - 1);
        std::string tail = word.substr(word.size() - 1);
        tail.push_back('\'');
        tail.push_back(raw[i + 1]);
        i += 2;
        if (!head.empty()) push(std::move(head));
        push(std::move(tail));  // stems to "not"
        continue;
      }
      if (to_lower(word) == "cannot") {
        push(word.substr(0, 3));
        push(word.substr(3));
        continue;
      }
      push(std::move(word));
      continue;
    }
    push(std::string(1, c));
    ++i;
  }
  return tokens;
}

std::vector<std::string> stem_phrase(std::string_view phrase) {
  std::vector<std::string> out;
  for (const Token& t : normalize_tokens(phrase)) out.push_back(t.stem);
  return out;
}

namespace {

std::vector<std::string>& abbreviation_store() {
  static std::vector<std::string> entries = {
      "e.g.", "i.e.", "etc.",  "v.",   "vs.",  "no.",  "sec.",  "fig.",
      "cf.",  "al.",  "inc.",  "ltd.", "co.",  "corp.", "dept.", "est.",
      "ver.", "rev.", "u.s.",  "st.",  "dr.",  "jr.",   "sr.",   "viz.",
  };
  return entries;
}

bool is_abbreviation(std::string_view text, std::size_t dot) {
  // Tail = characters since the last whitespace, through the dot.
  std::size_t b = dot;
  while (b > 0 && !std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  while (b < dot && !std::isalnum(static_cast<unsigned char>(text[b]))) ++b;
  if (b >= dot) return false;
  std::string tail = to_lower(text.substr(b, dot - b + 1));
  const auto& entries = abbreviation_store();
  return std::find(entries.begin(), entries.end(), tail) != entries.end();
}

bool is_list_marker_at(std::string_view text, std::size_t i) {
  // Bullet or enumerator at the start of a line.
  if (i >= text.size()) return false;
  char c = text[i];
  if ((c == '-' || c == '*' || c == '+') && i + 1 < text.size() &&
      (text[i + 1] == ' ' || text[i + 1] == '\t')) {
    return true;
  }
  if (is_ascii_digit(c)) {
    std::size_t j = i;
    while (j < text.size() && is_ascii_digit(text[j])) ++j;
    if (j < text.size() && (text[j] == '.' || text[j] == ')') &&
        j + 1 < text.size() && std::isspace(static_cast<unsigned char>(text[j + 1]))) {
      return true;
    }
  }
  if (c == '(' && i + 2 < text.size() &&
      std::isalnum(static_cast<unsigned char>(text[i + 1])) &&
      text[i + 2] == ')') {
    return true;
  }
  return false;
}

struct Span {
  std::size_t begin;
  std::size_t end;
};

// Offsets of each token within the raw span; used for the 120-token wrap.
std::vector<Span> token_spans(std::string_view raw) {
  std::vector<Span> spans;
  std::size_t i = 0;
  while (i < raw.size()) {
    if (std::isspace(static_cast<unsigned char>(raw[i]))) {
      ++i;
      continue;
    }
    std::size_t begin = i;
    if (is_word_char(raw[i])) {
      while (i < raw.size() && is_word_char(raw[i])) ++i;
    } else {
      ++i;
    }
    spans.push_back({begin, i});
  }
  return spans;
}

}  // namespace

const std::vector<std::string>& default_abbreviations() {
  return abbreviation_store();
}

void set_abbreviations(std::vector<std::string> entries) {
  abbreviation_store() = std::move(entries);
}

bool load_abbreviations(const std::string& path) {
  std::ifstream in(path);
  if (!in) return false;
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    entries.push_back(to_lower(t));
  }
  if (entries.empty()) return false;
  set_abbreviations(std::move(entries));
  return true;
}

std::vector<Sentence> split_sentences(std::string_view input,
                                      std::vector<std::string>* warnings) {
  std::vector<std::pair<std::size_t, std::size_t>> spans;  // [begin, end)
  const std::size_t n = input.size();
  std::size_t start = 0;
  std::size_t i = 0;
  auto close_span = [&](std::size_t end, std::size_t next_start) {
    if (end > start) spans.emplace_back(start, end);
    start = next_start;
  };
  while (i < n) {
    char c = input[i];
    if (c == '.' || c == '!' || c == '?' || c == ';') {
      if (c == '.') {
        bool digits = i > 0 && i + 1 < n && is_ascii_digit(input[i - 1]) &&
                      is_ascii_digit(input[i + 1]);
        if (digits || is_abbreviation(input, i)) {
          ++i;
          continue;
        }
      }
      // Swallow a run of closing punctuation after the terminator.
      std::size_t end = i + 1;
      while (end < n && (input[end] == '.' || input[end] == ')' ||
                         input[end] == '"' || input[end] == '\'')) {
        ++end;
      }
      close_span(end, end);
      i = end;
      continue;
    }
    if (c == '\n') {
      std::size_t j = i + 1;
      while (j < n && (input[j] == ' ' || input[j] == '\t')) ++j;
      if (j < n && input[j] == '\n') {
        close_span(i, j + 1);  // blank line
        i = j + 1;
        continue;
      }
      if (j < n && is_list_marker_at(input, j)) {
        close_span(i, j);
        i = j;
        continue;
      }
    }
    ++i;
  }
  close_span(n, n);

  std::vector<Sentence> out;
  int index = 0;
  for (auto [b, e] : spans) {
    std::string raw = std::string(input.substr(b, e - b));
    // Re-split pieces that exceed the token cap; long sentences defeat the
    // chunker, so wrap at the last clause comma before the cap.
    std::vector<std::string> pieces;
    std::string rest = raw;
    for (;;) {
      auto sp = token_spans(rest);
      if (static_cast<int>(sp.size()) <= kMaxSentenceTokens) {
        pieces.push_back(rest);
        break;
      }
      int cut_token = kMaxSentenceTokens - 1;
      for (int t = kMaxSentenceTokens - 1; t > 0; --t) {
        if (rest[sp[static_cast<std::size_t>(t)].begin] == ',') {
          cut_token = t;
          break;
        }
      }
      std::size_t cut = sp[static_cast<std::size_t>(cut_token)].end;
      pieces.push_back(rest.substr(0, cut));
      rest = rest.substr(cut);
      if (warnings != nullptr) {
        warnings->push_back("sentence wrapped at " +
                            std::to_string(kMaxSentenceTokens) + " tokens");
      }
    }
    for (std::string& piece : pieces) {
      std::string trimmed = trim(piece);
      if (trimmed.empty()) continue;
      Sentence s;
      s.tokens = normalize_tokens(trimmed);
      if (s.tokens.empty()) continue;
      s.raw = std::move(trimmed);
      s.index = index++;
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace lidetect::text
