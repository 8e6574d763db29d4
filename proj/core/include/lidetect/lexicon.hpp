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

#ifndef LIDETECT_LEXICON_HPP_
#define LIDETECT_LEXICON_HPP_

#include <set>
#include <string>
#include <vector>

namespace lidetect::gram {

// Expressions that carry a restrictive (CANNOT) or obligating (MUST)
// attitude. Entries are stored verbatim and matched on stems; multiword
// entries match consecutive stems.
class AttitudeLexicon {
 public:
  AttitudeLexicon(std::vector<std::string> cannot_words,
                  std::vector<std::string> must_words);

  static const AttitudeLexicon& defaults();
  // JSON form: {"cannot": [...], "must": [...]}
  static AttitudeLexicon load(const std::string& path);

  const std::vector<std::string>& cannot_words() const { return cannot_; }
  const std::vector<std::string>& must_words() const { return must_; }

  bool cannot_stem(const std::string& stem) const {
    return cannot_single_.count(stem) > 0;
  }
  bool must_stem(const std::string& stem) const {
    return must_single_.count(stem) > 0;
  }

  struct Phrase {
    std::vector<std::string> stems;
    bool is_must = false;
  };
  const std::vector<Phrase>& phrases() const { return phrases_; }

 private:
  std::vector<std::string> cannot_;
  std::vector<std::string> must_;
  std::set<std::string> cannot_single_;
  std::set<std::string> must_single_;
  std::vector<Phrase> phrases_;  // multiword entries, longest first
};

}  // namespace lidetect::gram

#endif  // LIDETECT_LEXICON_HPP_
