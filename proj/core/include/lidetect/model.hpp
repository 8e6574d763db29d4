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

#ifndef LIDETECT_MODEL_HPP_
#define LIDETECT_MODEL_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lidetect/bio.hpp"
#include "lidetect/text.hpp"

namespace lidetect::ner {

struct PositionOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

inline constexpr const char* kFeatureTemplateVersion = "1";

// Deterministic per-position feature template: stems in a +/-2 window with
// boundary markers, token shape, position bucket, attitude-lexicon presence
// in the window, and adjacent-stem bigrams.
std::vector<std::string> featurize(const text::Sentence& sentence,
                                   int position);

// Linear-chain scorer: per-token feature weights keyed "LABEL|feature" plus
// a dense 47x47 transition matrix. Decoding applies the structural BIO mask
// on top, so output is always valid. Serialization round-trips bit-exactly.
class SequenceModel {
 public:
  SequenceModel();

  std::string template_version = kFeatureTemplateVersion;

  double feature_weight(int label, const std::string& feature) const;
  void set_feature_weight(int label, const std::string& feature, double w);
  const std::map<std::string, double>& feature_weights() const {
    return weights_;
  }

  double transition(int prev, int next) const {
    return transitions_[static_cast<std::size_t>(prev) * kNumLabels +
                        static_cast<std::size_t>(next)];
  }
  void set_transition(int prev, int next, double w) {
    transitions_[static_cast<std::size_t>(prev) * kNumLabels +
                 static_cast<std::size_t>(next)] = w;
  }

  std::string to_json_text() const;
  static SequenceModel from_json_text(const std::string& text);
  static SequenceModel load(const std::string& path);
  bool save(const std::string& path) const;

  // Per-position label scores (no transitions), in label order.
  std::vector<double> emission_scores(const text::Sentence& sentence,
                                      int position) const;

 private:
  std::map<std::string, double> weights_;
  std::vector<double> transitions_;  // row-major [prev * 47 + next]
};

// Viterbi decoding under the BIO mask; ties break toward the earlier label
// in the alphabet, so the all-zero model yields all O.
std::vector<int> tag(const SequenceModel& model, const text::Sentence& sentence);

// Marginal probability of each chosen label, p(y_i = labels[i] | x); used
// for pseudo-label confidence gating.
std::vector<double> label_marginals(const SequenceModel& model,
                                    const text::Sentence& sentence,
                                    const std::vector<int>& labels);

}  // namespace lidetect::ner

#endif  // LIDETECT_MODEL_HPP_
