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

#ifndef LIDETECT_BIO_HPP_
#define LIDETECT_BIO_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lidetect/terms.hpp"
#include "lidetect/text.hpp"

namespace lidetect::ner {

// Label alphabet: O first (index 0), then B-t/I-t pairs in term order.
// 1 + 2*23 = 47 labels. The order doubles as the decoding tie-break.
inline constexpr int kNumLabels = 1 + 2 * kNumTerms;
inline constexpr int kLabelO = 0;

inline int label_b(int term) { return 1 + 2 * term; }
inline int label_i(int term) { return 2 + 2 * term; }
inline bool is_b(int label) { return label > 0 && (label % 2) == 1; }
inline bool is_i(int label) { return label > 0 && (label % 2) == 0; }
inline int term_of(int label) { return (label - 1) / 2; }

std::string label_name(int label);                    // "O", "B-0".."I-22"
std::optional<int> label_from_name(std::string_view); // inverse

const std::vector<std::string>& label_alphabet();

// I(t) may only follow B(t) or I(t); nothing else is constrained.
bool valid_transition(int prev, int next);
bool valid_start(int label);
bool valid_bio(const std::vector<int>& labels);

// A localized span of license text realizing one term.
struct TermEntity {
  int term = 0;
  int begin = 0;  // token index, inclusive
  int end = 0;    // token index, exclusive
  int sentence_index = 0;

  friend bool operator==(const TermEntity&, const TermEntity&) = default;
  friend auto operator<=>(const TermEntity&, const TermEntity&) = default;
};

struct LabeledSentence {
  text::Sentence sentence;
  std::vector<int> labels;
};

struct LengthMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Each maximal B(t) I(t)* run becomes one entity. A dangling I is coerced
// to B (possible only in hand-written fixtures) and recorded as a warning.
std::vector<TermEntity> decode_entities(const std::vector<int>& labels,
                                        const text::Sentence& sentence,
                                        std::vector<std::string>* warnings = nullptr);

// Inverse of decode_entities for non-overlapping entity sets.
std::vector<int> encode_labels(const std::vector<TermEntity>& entities,
                               int num_tokens);

}  // namespace lidetect::ner

#endif  // LIDETECT_BIO_HPP_
