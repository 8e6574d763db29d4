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

#ifndef LIDETECT_TEXT_HPP_
#define LIDETECT_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace lidetect::text {

struct Token {
  std::string surface;
  std::string stem;  // always lowercase
  int position = 0;  // index within the sentence, strictly increasing
};

struct Sentence {
  std::vector<Token> tokens;
  std::string raw;
  int index = 0;  // position within the license text
};

// Deterministic suffix-stripping stemmer. Output is lowercase; related
// inflections co-stem (distribute/distribution/redistributions ->
// "distribut"/"redistribut"). Frozen by golden tests.
std::string stem(std::string_view word);

// Whitespace/punctuation tokenizer. Punctuation becomes its own token.
// Treebank-style special cases: a trailing "n't" splits off (stem "not")
// and "cannot" splits into "can" + "not".
std::vector<Token> normalize_tokens(std::string_view sentence_raw);

// Sentence boundaries: . ; ! ? blank lines and list-item starts, guarded by
// an abbreviation list. Sentences longer than kMaxSentenceTokens are wrapped
// at the last clause comma and a warning is recorded.
inline constexpr int kMaxSentenceTokens = 120;

std::vector<Sentence> split_sentences(std::string_view text,
                                      std::vector<std::string>* warnings = nullptr);

// The built-in abbreviation guard list; a resource file (one entry per line,
// '#' comments) can replace it.
const std::vector<std::string>& default_abbreviations();
void set_abbreviations(std::vector<std::string> entries);
bool load_abbreviations(const std::string& path);

// Stems every whitespace-separated word of a lexicon phrase, e.g.
// "provided that" -> {"provid", "that"}. Used by lexicon and cue matching.
std::vector<std::string> stem_phrase(std::string_view phrase);

}  // namespace lidetect::text

#endif  // LIDETECT_TEXT_HPP_
