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

#include "lidetect/bio.hpp"

#include <algorithm>

namespace lidetect::ner {

std::string label_name(int label) {
  if (label == kLabelO) return "O";
  int term = term_of(label);
  return (is_b(label) ? "B-" : "I-") + std::to_string(term);
}

std::optional<int> label_from_name(std::string_view name) {
  if (name == "O") return kLabelO;
  if (name.size() < 3 || name[1] != '-') return std::nullopt;
  if (name[0] != 'B' && name[0] != 'I') return std::nullopt;
  int term = 0;
  for (std::size_t i = 2; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return std::nullopt;
    term = term * 10 + (name[i] - '0');
  }
  if (term < 0 || term >= kNumTerms) return std::nullopt;
  return name[0] == 'B' ? label_b(term) : label_i(term);
}

const std::vector<std::string>& label_alphabet() {
  static const std::vector<std::string> alphabet = [] {
    std::vector<std::string> out;
    out.reserve(kNumLabels);
    for (int l = 0; l < kNumLabels; ++l) out.push_back(label_name(l));
    return out;
  }();
  return alphabet;
}

bool valid_transition(int prev, int next) {
  if (!is_i(next)) return true;
  int term = term_of(next);
  return (is_b(prev) || is_i(prev)) && term_of(prev) == term;
}

bool valid_start(int label) { return !is_i(label); }

bool valid_bio(const std::vector<int>& labels) {
  if (labels.empty()) return true;
  if (!valid_start(labels[0])) return false;
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (!valid_transition(labels[i - 1], labels[i])) return false;
  }
  return true;
}

std::vector<TermEntity> decode_entities(const std::vector<int>& labels,
                                        const text::Sentence& sentence,
                                        std::vector<std::string>* warnings) {
  if (labels.size() != sentence.tokens.size()) {
    throw LengthMismatch("labels/tokens length mismatch: " +
                         std::to_string(labels.size()) + " vs " +
                         std::to_string(sentence.tokens.size()));
  }
  std::vector<TermEntity> entities;
  int open_term = -1;
  int open_begin = -1;
  auto close = [&](int end) {
    if (open_term >= 0) {
      entities.push_back(TermEntity{open_term, open_begin, end, sentence.index});
      open_term = -1;
    }
  };
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    int label = labels[static_cast<std::size_t>(i)];
    if (label == kLabelO) {
      close(i);
      continue;
    }
    int term = term_of(label);
    if (is_b(label)) {
      close(i);
      open_term = term;
      open_begin = i;
      continue;
    }
    // I label: continues the run, or dangles and is coerced to B.
    if (open_term == term) continue;
    close(i);
    if (warnings != nullptr) {
      warnings->push_back("dangling I-" + std::to_string(term) +
                          " coerced to B at token " + std::to_string(i));
    }
    open_term = term;
    open_begin = i;
  }
  close(static_cast<int>(labels.size()));
  return entities;
}

std::vector<int> encode_labels(const std::vector<TermEntity>& entities,
                               int num_tokens) {
  std::vector<int> labels(static_cast<std::size_t>(num_tokens), kLabelO);
  std::vector<TermEntity> sorted = entities;
  std::sort(sorted.begin(), sorted.end(),
            [](const TermEntity& a, const TermEntity& b) {
              return a.begin < b.begin;
            });
  for (const TermEntity& e : sorted) {
    if (e.begin < 0 || e.end > num_tokens || e.begin >= e.end) {
      throw std::out_of_range("entity span out of bounds");
    }
    labels[static_cast<std::size_t>(e.begin)] = label_b(e.term);
    for (int i = e.begin + 1; i < e.end; ++i) {
      labels[static_cast<std::size_t>(i)] = label_i(e.term);
    }
  }
  return labels;
}

}  // namespace lidetect::ner
