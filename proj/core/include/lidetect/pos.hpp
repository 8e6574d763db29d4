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

#ifndef LIDETECT_POS_HPP_
#define LIDETECT_POS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "lidetect/text.hpp"

namespace lidetect::gram {

// Tag alphabet. Phrase tags first, then token-level tags. PUNCT is an
// addition: tokens include punctuation, which the standard tag table leaves
// to the full treebank set.
enum class Tag {
  // phrase level
  kRoot,
  kS,
  kNP,
  kVP,
  kSBAR,
  kWHNP,
  // token level
  kVB,
  kVBD,
  kVBG,
  kVBN,
  kVBP,
  kVBZ,
  kMD,
  kIN,
  kRB,
  kRBR,
  kRBS,
  kPRP,
  kPDT,
  kDT,
  kNN,
  kNNS,
  kJJ,
  kWDT,
  kPunct,
};

std::string to_string(Tag tag);
std::optional<Tag> tag_from_string(std::string_view name);

bool is_token_tag(Tag tag);
bool is_verb(Tag tag);  // VB/VBD/VBG/VBN/VBP/VBZ

// Verb, modal, preposition and adverb tags can carry attitude force.
bool is_pt_eligible(Tag tag);

// Lexicon + suffix-rule tagger over the alphabet above; deterministic.
// Closed-class lists cover MD/IN/DT/PDT/PRP/RB/WDT, a small verb lexicon and
// suffix rules (-ed -> VBD/VBN, -ing -> VBG, -s -> VBZ/NNS, adjective
// endings) handle the rest, NN is the default.
std::vector<Tag> pos_tag(const text::Sentence& sentence);

}  // namespace lidetect::gram

#endif  // LIDETECT_POS_HPP_
