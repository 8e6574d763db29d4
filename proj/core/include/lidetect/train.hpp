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

#ifndef LIDETECT_TRAIN_HPP_
#define LIDETECT_TRAIN_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lidetect/model.hpp"

namespace lidetect::ner {

struct TrainingCorpus {
  std::vector<LabeledSentence> labeled;
  std::vector<text::Sentence> unlabeled;
};

struct TrainConfig {
  double l2 = 0.3;
  int max_iterations = 150;
  double tolerance = 1e-6;
  bool semi_supervised = false;
  double pseudo_threshold = 0.9;
  std::uint64_t seed = 1;  // recorded for reproducibility; training is batch
};

struct EmptyLabeledCorpus : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonFiniteLoss : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyTestset : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TsvFormatError : std::runtime_error {
  TsvFormatError(const std::string& msg, int line)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ")"),
        line_number(line) {}
  int line_number;
};

// Fits the L2-regularized linear-chain CRF objective with L-BFGS. With
// semi_supervised set, a second pass tags corpus.unlabeled with the phase-1
// model, keeps sentences whose minimum per-token marginal confidence reaches
// pseudo_threshold, and retrains on the union. Deterministic.
SequenceModel train(const TrainingCorpus& corpus, const TrainConfig& config);

struct Metrics {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  int true_positives = 0;
  int predicted = 0;
  int gold = 0;
};

// Entity-level scoring with exact span-and-term matching. Zero denominators
// report as 0.
Metrics evaluate(const SequenceModel& model,
                 const std::vector<LabeledSentence>& testset);

// TSV format: one `surface<TAB>label` per line, blank line between
// sentences, labels spelled "B-0".."B-22", "I-0".."I-22", "O".
std::vector<LabeledSentence> load_tsv(const std::string& path);
std::vector<LabeledSentence> parse_tsv(const std::string& content);
std::string to_tsv(const std::vector<LabeledSentence>& sentences);

// Unlabeled corpus: one sentence per line, '#' comment lines skipped.
std::vector<text::Sentence> load_unlabeled(const std::string& path);

}  // namespace lidetect::ner

#endif  // LIDETECT_TRAIN_HPP_
