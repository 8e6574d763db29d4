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

#include "lidetect/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

#include "lidetect/lexicon.hpp"
#include "lidetect/util.hpp"

using nlohmann::json;

namespace lidetect::ner {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::string token_shape(const std::string& surface) {
  bool has_lower = false, has_upper = false, has_digit = false,
       has_other = false;
  for (char c : surface) {
    unsigned char u = static_cast<unsigned char>(c);
    if (std::islower(u)) {
      has_lower = true;
    } else if (std::isupper(u)) {
      has_upper = true;
    } else if (std::isdigit(u)) {
      has_digit = true;
    } else {
      has_other = true;
    }
  }
  if (!has_lower && !has_upper && !has_digit) return "punct";
  if (has_digit && !has_lower && !has_upper) return "digit";
  if (has_other || (has_digit && (has_lower || has_upper))) return "mixed";
  if (!has_upper) return "word";
  if (!has_lower) return "upper";
  if (std::isupper(static_cast<unsigned char>(surface[0])) && !has_digit) {
    bool rest_lower = true;
    for (std::size_t i = 1; i < surface.size(); ++i) {
      if (std::isupper(static_cast<unsigned char>(surface[i]))) {
        rest_lower = false;
        break;
      }
    }
    if (rest_lower) return "cap";
  }
  return "mixed";
}

std::string position_bucket(int position, int length) {
  if (position == 0) return "first";
  if (position == length - 1) return "last";
  int q = (position * 4) / std::max(length, 1);
  return "q" + std::to_string(q + 1);
}

const std::string& stem_at(const text::Sentence& s, int i) {
  static const std::string kBos = "<s>";
  static const std::string kEos = "</s>";
  if (i < 0) return kBos;
  if (i >= static_cast<int>(s.tokens.size())) return kEos;
  return s.tokens[static_cast<std::size_t>(i)].stem;
}

double logsumexp(const std::vector<double>& v) {
  double m = kNegInf;
  for (double x : v) m = std::max(m, x);
  if (m == kNegInf) return kNegInf;
  double sum = 0;
  for (double x : v) sum += std::exp(x - m);
  return m + std::log(sum);
}

}  // namespace

std::vector<std::string> featurize(const text::Sentence& sentence,
                                   int position) {
  const int n = static_cast<int>(sentence.tokens.size());
  if (position < 0 || position >= n) {
    throw PositionOutOfRange("featurize position " + std::to_string(position) +
                             " out of range for " + std::to_string(n) +
                             " tokens");
  }
  std::vector<std::string> feats;
  feats.reserve(12);
  for (int d = -2; d <= 2; ++d) {
    std::string name = d == 0 ? "w0" : (d < 0 ? "w" : "w+") + std::to_string(d);
    feats.push_back(name + "=" + stem_at(sentence, position + d));
  }
  feats.push_back(
      "shape=" +
      token_shape(sentence.tokens[static_cast<std::size_t>(position)].surface));
  feats.push_back("pos=" + position_bucket(position, n));

  const gram::AttitudeLexicon& lex = gram::AttitudeLexicon::defaults();
  bool saw_cannot = false, saw_must = false;
  for (int d = -2; d <= 2; ++d) {
    int i = position + d;
    if (i < 0 || i >= n) continue;
    const std::string& stem = sentence.tokens[static_cast<std::size_t>(i)].stem;
    saw_cannot = saw_cannot || lex.cannot_stem(stem);
    saw_must = saw_must || lex.must_stem(stem);
  }
  if (saw_cannot) feats.push_back("lex=cannot");
  if (saw_must) feats.push_back("lex=must");

  feats.push_back("bi-1=" + stem_at(sentence, position - 1) + "_" +
                  stem_at(sentence, position));
  feats.push_back("bi+1=" + stem_at(sentence, position) + "_" +
                  stem_at(sentence, position + 1));
  return feats;
}

SequenceModel::SequenceModel()
    : transitions_(static_cast<std::size_t>(kNumLabels) * kNumLabels, 0.0) {}

double SequenceModel::feature_weight(int label,
                                     const std::string& feature) const {
  auto it = weights_.find(label_name(label) + "|" + feature);
  return it == weights_.end() ? 0.0 : it->second;
}

void SequenceModel::set_feature_weight(int label, const std::string& feature,
                                       double w) {
  weights_[label_name(label) + "|" + feature] = w;
}

std::vector<double> SequenceModel::emission_scores(
    const text::Sentence& sentence, int position) const {
  std::vector<double> scores(kNumLabels, 0.0);
  for (const std::string& f : featurize(sentence, position)) {
    // One pass per feature over all labels; key layout is "LABEL|feature".
    for (int l = 0; l < kNumLabels; ++l) {
      auto it = weights_.find(label_name(l) + "|" + f);
      if (it != weights_.end()) scores[static_cast<std::size_t>(l)] += it->second;
    }
  }
  return scores;
}

std::string SequenceModel::to_json_text() const {
  json j;
  j["template_version"] = template_version;
  j["label_alphabet"] = label_alphabet();
  json feats = json::object();
  for (const auto& [k, v] : weights_) {
    if (v != 0.0) feats[k] = v;
  }
  j["features"] = std::move(feats);
  json rows = json::array();
  for (int p = 0; p < kNumLabels; ++p) {
    json row = json::array();
    for (int q = 0; q < kNumLabels; ++q) row.push_back(transition(p, q));
    rows.push_back(std::move(row));
  }
  j["transitions"] = std::move(rows);
  return j.dump(1) + "\n";
}

SequenceModel SequenceModel::from_json_text(const std::string& text) {
  json j = json::parse(text);
  SequenceModel model;
  model.template_version = j.at("template_version").get<std::string>();
  auto alphabet = j.at("label_alphabet").get<std::vector<std::string>>();
  if (alphabet != label_alphabet()) {
    throw std::runtime_error("model label alphabet mismatch");
  }
  for (auto it = j.at("features").begin(); it != j.at("features").end(); ++it) {
    double v = it.value().get<double>();
    if (!std::isfinite(v)) throw std::runtime_error("non-finite model weight");
    model.weights_[it.key()] = v;
  }
  const json& rows = j.at("transitions");
  if (rows.size() != kNumLabels) {
    throw std::runtime_error("bad transition matrix shape");
  }
  for (int p = 0; p < kNumLabels; ++p) {
    const json& row = rows[static_cast<std::size_t>(p)];
    if (row.size() != kNumLabels) {
      throw std::runtime_error("bad transition matrix shape");
    }
    for (int q = 0; q < kNumLabels; ++q) {
      double v = row[static_cast<std::size_t>(q)].get<double>();
      if (!std::isfinite(v)) throw std::runtime_error("non-finite transition");
      model.set_transition(p, q, v);
    }
  }
  return model;
}

SequenceModel SequenceModel::load(const std::string& path) {
  auto content = read_file(path);
  if (!content) throw std::runtime_error("cannot read model: " + path);
  return from_json_text(*content);
}

bool SequenceModel::save(const std::string& path) const {
  return write_file(path, to_json_text());
}

std::vector<int> tag(const SequenceModel& model,
                     const text::Sentence& sentence) {
  const int n = static_cast<int>(sentence.tokens.size());
  if (n == 0) return {};
  std::vector<std::vector<double>> delta(
      static_cast<std::size_t>(n), std::vector<double>(kNumLabels, kNegInf));
  std::vector<std::vector<int>> back(
      static_cast<std::size_t>(n), std::vector<int>(kNumLabels, 0));

  std::vector<double> em = model.emission_scores(sentence, 0);
  for (int l = 0; l < kNumLabels; ++l) {
    if (valid_start(l)) delta[0][static_cast<std::size_t>(l)] = em[static_cast<std::size_t>(l)];
  }
  for (int i = 1; i < n; ++i) {
    em = model.emission_scores(sentence, i);
    for (int l = 0; l < kNumLabels; ++l) {
      double best = kNegInf;
      int best_prev = 0;
      for (int p = 0; p < kNumLabels; ++p) {
        if (!valid_transition(p, l)) continue;
        double score = delta[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(p)];
        if (score == kNegInf) continue;
        score += model.transition(p, l);
        if (score > best) {  // strict: first max wins the tie-break
          best = score;
          best_prev = p;
        }
      }
      if (best != kNegInf) {
        delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] =
            best + em[static_cast<std::size_t>(l)];
        back[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] = best_prev;
      }
    }
  }
  int best_last = 0;
  double best = kNegInf;
  for (int l = 0; l < kNumLabels; ++l) {
    double score = delta[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(l)];
    if (score > best) {
      best = score;
      best_last = l;
    }
  }
  std::vector<int> labels(static_cast<std::size_t>(n));
  labels[static_cast<std::size_t>(n - 1)] = best_last;
  for (int i = n - 1; i > 0; --i) {
    labels[static_cast<std::size_t>(i - 1)] =
        back[static_cast<std::size_t>(i)][labels[static_cast<std::size_t>(i)]];
  }
  return labels;
}

std::vector<double> label_marginals(const SequenceModel& model,
                                    const text::Sentence& sentence,
                                    const std::vector<int>& labels) {
  const int n = static_cast<int>(sentence.tokens.size());
  if (labels.size() != static_cast<std::size_t>(n)) {
    throw LengthMismatch("label_marginals length mismatch");
  }
  if (n == 0) return {};
  std::vector<std::vector<double>> em;
  em.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) em.push_back(model.emission_scores(sentence, i));

  std::vector<std::vector<double>> alpha(
      static_cast<std::size_t>(n), std::vector<double>(kNumLabels, kNegInf));
  std::vector<std::vector<double>> beta(
      static_cast<std::size_t>(n), std::vector<double>(kNumLabels, kNegInf));
  for (int l = 0; l < kNumLabels; ++l) {
    if (valid_start(l)) alpha[0][static_cast<std::size_t>(l)] = em[0][static_cast<std::size_t>(l)];
  }
  std::vector<double> buf(kNumLabels);
  for (int i = 1; i < n; ++i) {
    for (int l = 0; l < kNumLabels; ++l) {
      buf.clear();
      for (int p = 0; p < kNumLabels; ++p) {
        if (!valid_transition(p, l)) continue;
        double a = alpha[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(p)];
        if (a == kNegInf) continue;
        buf.push_back(a + model.transition(p, l));
      }
      double s = logsumexp(buf);
      alpha[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] =
          s == kNegInf ? kNegInf : s + em[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
    }
  }
  for (int l = 0; l < kNumLabels; ++l) {
    beta[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(l)] = 0.0;
  }
  for (int i = n - 2; i >= 0; --i) {
    for (int p = 0; p < kNumLabels; ++p) {
      buf.clear();
      for (int l = 0; l < kNumLabels; ++l) {
        if (!valid_transition(p, l)) continue;
        double b = beta[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(l)];
        if (b == kNegInf) continue;
        buf.push_back(b + model.transition(p, l) +
                      em[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(l)]);
      }
      beta[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)] = logsumexp(buf);
    }
  }
  std::vector<double> z_terms;
  for (int l = 0; l < kNumLabels; ++l) {
    double a = alpha[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(l)];
    if (a != kNegInf) z_terms.push_back(a);
  }
  double log_z = logsumexp(z_terms);
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    int l = labels[static_cast<std::size_t>(i)];
    double a = alpha[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
    double b = beta[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
    out[static_cast<std::size_t>(i)] =
        (a == kNegInf || b == kNegInf) ? 0.0 : std::exp(a + b - log_z);
  }
  return out;
}

}  // namespace lidetect::ner
