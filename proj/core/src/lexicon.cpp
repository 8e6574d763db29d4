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

#include "lidetect/lexicon.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "lidetect/text.hpp"
#include "lidetect/util.hpp"

namespace lidetect::gram {

AttitudeLexicon::AttitudeLexicon(std::vector<std::string> cannot_words,
                                 std::vector<std::string> must_words)
    : cannot_(std::move(cannot_words)), must_(std::move(must_words)) {
  auto index = [this](const std::vector<std::string>& words, bool is_must) {
    for (const std::string& entry : words) {
      std::vector<std::string> stems = text::stem_phrase(entry);
      if (stems.empty()) continue;
      if (stems.size() == 1) {
        (is_must ? must_single_ : cannot_single_).insert(stems[0]);
      } else {
        phrases_.push_back(Phrase{std::move(stems), is_must});
      }
    }
  };
  index(cannot_, false);
  index(must_, true);
  for (const std::string& s : cannot_single_) {
    if (must_single_.count(s) > 0) {
      throw std::runtime_error("attitude lexicon sets overlap on: " + s);
    }
  }
  // Longest phrases first so "as long as" beats any shorter overlap.
  std::stable_sort(phrases_.begin(), phrases_.end(),
                   [](const Phrase& a, const Phrase& b) {
                     return a.stems.size() > b.stems.size();
                   });
}

const AttitudeLexicon& AttitudeLexicon::defaults() {
  static const AttitudeLexicon lex(
      {"not", "without", "notwithstand", "refuse", "disallow", "decline",
       "against", "delete", "nor", "void", "neither", "prohibit", "remove",
       "don't", "no", "nothing"},
      {"must", "should", "as long as", "so long as", "shall", "provided that",
       "ensure that", "ask that", "have to"});
  return lex;
}

AttitudeLexicon AttitudeLexicon::load(const std::string& path) {
  auto content = read_file(path);
  if (!content) throw std::runtime_error("cannot read lexicon: " + path);
  nlohmann::json j = nlohmann::json::parse(*content);
  std::vector<std::string> cannot_words, must_words;
  for (const auto& v : j.at("cannot")) {
    cannot_words.push_back(v.get<std::string>());
  }
  for (const auto& v : j.at("must")) {
    must_words.push_back(v.get<std::string>());
  }
  return AttitudeLexicon(std::move(cannot_words), std::move(must_words));
}

}  // namespace lidetect::gram
