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

#include "lidetect/train.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "lidetect/util.hpp"

namespace lidetect::ner {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double logsumexp(const std::vector<double>& v) {
  double m = kNegInf;
  for (double x : v) m = std::max(m, x);
  if (m == kNegInf) return kNegInf;
  double sum = 0;
  for (double x : v) sum += std::exp(x - m);
  return m + std::log(sum);
}

// Indexed view of the corpus: interned raw features and a parameter vector
// restricted to (feature, label) pairs observed in the gold data, plus the
// dense transition block.
class Problem {
 public:
  explicit Problem(const std::vector<LabeledSentence>& data) : data_(data) {
    for (const LabeledSentence& ls : data_) {
      std::vector<std::vector<int>> sent_feats;
      const int n = static_cast<int>(ls.sentence.tokens.size());
      for (int i = 0; i < n; ++i) {
        std::vector<int> ids;
        for (const std::string& f : featurize(ls.sentence, i)) {
          auto [it, inserted] = raw_ids_.emplace(f, raw_names_.size());
          if (inserted) {
            raw_names_.push_back(f);
            raw_params_.emplace_back();
          }
          ids.push_back(static_cast<int>(it->second));
        }
        sent_feats.push_back(std::move(ids));
      }
      feats_.push_back(std::move(sent_feats));
    }
    // State parameters exist only for (raw, gold label) pairs.
    for (std::size_t s = 0; s < data_.size(); ++s) {
      const auto& labels = data_[s].labels;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        int y = labels[i];
        for (int raw : feats_[s][i]) {
          auto& per_raw = raw_params_[static_cast<std::size_t>(raw)];
          bool found = false;
          for (const auto& [label, param] : per_raw) {
            if (label == y) {
              found = true;
              break;
            }
          }
          if (!found) {
            per_raw.emplace_back(y, num_state_params_++);
          }
        }
      }
    }
    num_params_ = num_state_params_ + kNumLabels * kNumLabels;
  }

  std::size_t num_params() const { return static_cast<std::size_t>(num_params_); }

  int trans_param(int p, int q) const {
    return num_state_params_ + p * kNumLabels + q;
  }

  // Negative log-likelihood plus L2, and its gradient.
  double eval(const std::vector<double>& w, double l2,
              std::vector<double>* grad) const {
    std::fill(grad->begin(), grad->end(), 0.0);
    double nll = 0;
    std::vector<double> buf;
    for (std::size_t s = 0; s < data_.size(); ++s) {
      const auto& labels = data_[s].labels;
      const auto& feats = feats_[s];
      const int n = static_cast<int>(labels.size());
      if (n == 0) continue;

      // Emission scores.
      std::vector<std::vector<double>> em(
          static_cast<std::size_t>(n), std::vector<double>(kNumLabels, 0.0));
      for (int i = 0; i < n; ++i) {
        for (int raw : feats[static_cast<std::size_t>(i)]) {
          for (const auto& [label, param] :
               raw_params_[static_cast<std::size_t>(raw)]) {
            em[static_cast<std::size_t>(i)][static_cast<std::size_t>(label)] +=
                w[static_cast<std::size_t>(param)];
          }
        }
      }
      // Forward/backward under the BIO mask.
      std::vector<std::vector<double>> alpha(
          static_cast<std::size_t>(n), std::vector<double>(kNumLabels, kNegInf));
      std::vector<std::vector<double>> beta(
          static_cast<std::size_t>(n), std::vector<double>(kNumLabels, kNegInf));
      for (int l = 0; l < kNumLabels; ++l) {
        if (valid_start(l)) alpha[0][static_cast<std::size_t>(l)] = em[0][static_cast<std::size_t>(l)];
      }
      for (int i = 1; i < n; ++i) {
        for (int l = 0; l < kNumLabels; ++l) {
          buf.clear();
          for (int p = 0; p < kNumLabels; ++p) {
            if (!valid_transition(p, l)) continue;
            double a = alpha[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(p)];
            if (a == kNegInf) continue;
            buf.push_back(a + w[static_cast<std::size_t>(trans_param(p, l))]);
          }
          double t = logsumexp(buf);
          alpha[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] =
              t == kNegInf ? kNegInf
                           : t + em[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
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
            buf.push_back(b + w[static_cast<std::size_t>(trans_param(p, l))] +
                          em[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(l)]);
          }
          beta[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)] = logsumexp(buf);
        }
      }
      buf.clear();
      for (int l = 0; l < kNumLabels; ++l) {
        double a = alpha[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(l)];
        if (a != kNegInf) buf.push_back(a);
      }
      double log_z = logsumexp(buf);

      // Gold path score.
      double gold = em[0][static_cast<std::size_t>(labels[0])];
      for (int i = 1; i < n; ++i) {
        gold += w[static_cast<std::size_t>(trans_param(labels[static_cast<std::size_t>(i - 1)],
                                                       labels[static_cast<std::size_t>(i)]))] +
                em[static_cast<std::size_t>(i)][static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])];
      }
      nll += log_z - gold;

      // Node expectations.
      for (int i = 0; i < n; ++i) {
        for (int raw : feats[static_cast<std::size_t>(i)]) {
          for (const auto& [label, param] :
               raw_params_[static_cast<std::size_t>(raw)]) {
            double a = alpha[static_cast<std::size_t>(i)][static_cast<std::size_t>(label)];
            double b = beta[static_cast<std::size_t>(i)][static_cast<std::size_t>(label)];
            if (a == kNegInf || b == kNegInf) continue;
            (*grad)[static_cast<std::size_t>(param)] += std::exp(a + b - log_z);
          }
        }
        for (int raw : feats[static_cast<std::size_t>(i)]) {
          for (const auto& [label, param] :
               raw_params_[static_cast<std::size_t>(raw)]) {
            if (label == labels[static_cast<std::size_t>(i)]) {
              (*grad)[static_cast<std::size_t>(param)] -= 1.0;
            }
          }
        }
      }
      // Edge expectations.
      for (int i = 1; i < n; ++i) {
        for (int p = 0; p < kNumLabels; ++p) {
          double a = alpha[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(p)];
          if (a == kNegInf) continue;
          for (int l = 0; l < kNumLabels; ++l) {
            if (!valid_transition(p, l)) continue;
            double b = beta[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
            if (b == kNegInf) continue;
            double xi = std::exp(a + w[static_cast<std::size_t>(trans_param(p, l))] +
                                 em[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] +
                                 b - log_z);
            (*grad)[static_cast<std::size_t>(trans_param(p, l))] += xi;
          }
        }
        (*grad)[static_cast<std::size_t>(trans_param(
            labels[static_cast<std::size_t>(i - 1)],
            labels[static_cast<std::size_t>(i)]))] -= 1.0;
      }
    }
    for (std::size_t k = 0; k < w.size(); ++k) {
      nll += 0.5 * l2 * w[k] * w[k];
      (*grad)[k] += l2 * w[k];
    }
    return nll;
  }

  void export_model(const std::vector<double>& w, SequenceModel* model) const {
    for (std::size_t raw = 0; raw < raw_names_.size(); ++raw) {
      for (const auto& [label, param] : raw_params_[raw]) {
        double v = w[static_cast<std::size_t>(param)];
        if (v != 0.0) model->set_feature_weight(label, raw_names_[raw], v);
      }
    }
    for (int p = 0; p < kNumLabels; ++p) {
      for (int q = 0; q < kNumLabels; ++q) {
        model->set_transition(p, q, w[static_cast<std::size_t>(trans_param(p, q))]);
      }
    }
  }

 private:
  const std::vector<LabeledSentence>& data_;
  std::map<std::string, std::size_t> raw_ids_;
  std::vector<std::string> raw_names_;
  // Per raw feature: (label, param index) pairs, in observation order.
  std::vector<std::vector<std::pair<int, int>>> raw_params_;
  std::vector<std::vector<std::vector<int>>> feats_;  // [sentence][pos][k]
  int num_state_params_ = 0;
  int num_params_ = 0;
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double inf_norm(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

void check_finite(double loss, const std::vector<double>& grad) {
  if (!std::isfinite(loss)) {
    throw NonFiniteLoss("objective became non-finite (loss=" +
                        std::to_string(loss) + ")");
  }
  for (double g : grad) {
    if (!std::isfinite(g)) {
      throw NonFiniteLoss("gradient became non-finite");
    }
  }
}

// Batch L-BFGS with backtracking line search; everything is deterministic.
std::vector<double> minimize(const Problem& problem, double l2,
                             int max_iterations, double tolerance) {
  const std::size_t dim = problem.num_params();
  std::vector<double> w(dim, 0.0);
  std::vector<double> grad(dim, 0.0);
  double loss = problem.eval(w, l2, &grad);
  check_finite(loss, grad);

  const std::size_t history = 6;
  std::deque<std::vector<double>> s_hist, y_hist;
  std::deque<double> rho_hist;

  std::vector<double> direction(dim), w_new(dim), grad_new(dim);
  for (int iter = 0; iter < max_iterations; ++iter) {
    if (inf_norm(grad) < tolerance) break;

    // Two-loop recursion.
    direction = grad;
    std::vector<double> alpha_coef(s_hist.size());
    for (std::size_t k = s_hist.size(); k-- > 0;) {
      alpha_coef[k] = rho_hist[k] * dot(s_hist[k], direction);
      for (std::size_t i = 0; i < dim; ++i) {
        direction[i] -= alpha_coef[k] * y_hist[k][i];
      }
    }
    if (!s_hist.empty()) {
      double gamma = dot(s_hist.back(), y_hist.back()) /
                     std::max(dot(y_hist.back(), y_hist.back()), 1e-12);
      for (double& d : direction) d *= gamma;
    }
    for (std::size_t k = 0; k < s_hist.size(); ++k) {
      double beta = rho_hist[k] * dot(y_hist[k], direction);
      for (std::size_t i = 0; i < dim; ++i) {
        direction[i] += (alpha_coef[k] - beta) * s_hist[k][i];
      }
    }
    for (double& d : direction) d = -d;

    double dg = dot(direction, grad);
    if (dg > -1e-12) {  // not a descent direction; restart from steepest
      for (std::size_t i = 0; i < dim; ++i) direction[i] = -grad[i];
      dg = dot(direction, grad);
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
    }

    double step = s_hist.empty() ? 1.0 / std::max(inf_norm(grad), 1.0) : 1.0;
    double new_loss = loss;
    bool accepted = false;
    for (int ls = 0; ls < 30; ++ls) {
      for (std::size_t i = 0; i < dim; ++i) w_new[i] = w[i] + step * direction[i];
      new_loss = problem.eval(w_new, l2, &grad_new);
      check_finite(new_loss, grad_new);
      if (new_loss <= loss + 1e-4 * step * dg) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;

    std::vector<double> s_vec(dim), y_vec(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      s_vec[i] = w_new[i] - w[i];
      y_vec[i] = grad_new[i] - grad[i];
    }
    double sy = dot(s_vec, y_vec);
    if (sy > 1e-10) {
      s_hist.push_back(std::move(s_vec));
      y_hist.push_back(std::move(y_vec));
      rho_hist.push_back(1.0 / sy);
      if (s_hist.size() > history) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    w.swap(w_new);
    grad.swap(grad_new);
    loss = new_loss;
  }
  return w;
}

SequenceModel fit(const std::vector<LabeledSentence>& data,
                  const TrainConfig& config) {
  Problem problem(data);
  std::vector<double> w =
      minimize(problem, config.l2, config.max_iterations, config.tolerance);
  SequenceModel model;
  problem.export_model(w, &model);
  return model;
}

}  // namespace

SequenceModel train(const TrainingCorpus& corpus, const TrainConfig& config) {
  if (corpus.labeled.empty()) {
    throw EmptyLabeledCorpus("training corpus has no labeled sentences");
  }
  for (const LabeledSentence& ls : corpus.labeled) {
    if (ls.labels.size() != ls.sentence.tokens.size() ||
        !valid_bio(ls.labels)) {
      throw std::runtime_error("invalid labeled sentence in corpus");
    }
  }
  SequenceModel phase1 = fit(corpus.labeled, config);
  if (!config.semi_supervised || corpus.unlabeled.empty()) return phase1;

  // Phase 2: pseudo-label, gate on minimum per-token marginal confidence,
  // retrain on the union.
  std::vector<LabeledSentence> combined = corpus.labeled;
  for (const text::Sentence& s : corpus.unlabeled) {
    if (s.tokens.empty()) continue;
    std::vector<int> predicted = tag(phase1, s);
    std::vector<double> conf = label_marginals(phase1, s, predicted);
    double min_conf = 1.0;
    for (double c : conf) min_conf = std::min(min_conf, c);
    if (min_conf >= config.pseudo_threshold) {
      combined.push_back(LabeledSentence{s, std::move(predicted)});
    }
  }
  if (combined.size() == corpus.labeled.size()) return phase1;
  return fit(combined, config);
}

Metrics evaluate(const SequenceModel& model,
                 const std::vector<LabeledSentence>& testset) {
  if (testset.empty()) throw EmptyTestset("empty test set");
  Metrics m;
  for (const LabeledSentence& ls : testset) {
    std::vector<TermEntity> gold = decode_entities(ls.labels, ls.sentence);
    std::vector<int> predicted_labels = tag(model, ls.sentence);
    std::vector<TermEntity> predicted =
        decode_entities(predicted_labels, ls.sentence);
    m.gold += static_cast<int>(gold.size());
    m.predicted += static_cast<int>(predicted.size());
    std::set<std::tuple<int, int, int>> gold_set;
    for (const TermEntity& e : gold) gold_set.insert({e.term, e.begin, e.end});
    for (const TermEntity& e : predicted) {
      if (gold_set.count({e.term, e.begin, e.end}) > 0) ++m.true_positives;
    }
  }
  m.precision = m.predicted == 0
                    ? 0.0
                    : static_cast<double>(m.true_positives) / m.predicted;
  m.recall =
      m.gold == 0 ? 0.0 : static_cast<double>(m.true_positives) / m.gold;
  m.f1 = (m.precision + m.recall) == 0.0
             ? 0.0
             : 2 * m.precision * m.recall / (m.precision + m.recall);
  return m;
}

std::vector<LabeledSentence> parse_tsv(const std::string& content) {
  std::vector<LabeledSentence> out;
  std::vector<std::string> surfaces;
  std::vector<int> labels;
  int lineno = 0;
  int sentence_start_line = 1;

  auto flush = [&]() {
    if (surfaces.empty()) return;
    LabeledSentence ls;
    std::string raw;
    for (std::size_t i = 0; i < surfaces.size(); ++i) {
      if (i > 0) raw += ' ';
      raw += surfaces[i];
      text::Token t;
      t.surface = surfaces[i];
      t.stem = text::stem(surfaces[i]);
      t.position = static_cast<int>(i);
      ls.sentence.tokens.push_back(std::move(t));
    }
    ls.sentence.raw = std::move(raw);
    ls.sentence.index = static_cast<int>(out.size());
    ls.labels = labels;
    if (!valid_bio(ls.labels)) {
      throw TsvFormatError("invalid BIO sequence", sentence_start_line);
    }
    out.push_back(std::move(ls));
    surfaces.clear();
    labels.clear();
  };

  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      sentence_start_line = lineno + 1;
      continue;
    }
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
      throw TsvFormatError("expected `surface<TAB>label`", lineno);
    }
    std::string surface = line.substr(0, tab);
    std::string label_str = line.substr(tab + 1);
    auto label = label_from_name(label_str);
    if (!label.has_value()) {
      throw TsvFormatError("unknown label \"" + label_str + "\"", lineno);
    }
    surfaces.push_back(std::move(surface));
    labels.push_back(*label);
  }
  flush();
  return out;
}

std::vector<LabeledSentence> load_tsv(const std::string& path) {
  auto content = read_file(path);
  if (!content) throw std::runtime_error("cannot read corpus: " + path);
  return parse_tsv(*content);
}

std::string to_tsv(const std::vector<LabeledSentence>& sentences) {
  std::string out;
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    if (s > 0) out += '\n';
    const LabeledSentence& ls = sentences[s];
    for (std::size_t i = 0; i < ls.sentence.tokens.size(); ++i) {
      out += ls.sentence.tokens[i].surface;
      out += '\t';
      out += label_name(ls.labels[i]);
      out += '\n';
    }
  }
  return out;
}

std::vector<text::Sentence> load_unlabeled(const std::string& path) {
  auto content = read_file(path);
  if (!content) throw std::runtime_error("cannot read corpus: " + path);
  std::vector<text::Sentence> out;
  std::istringstream in(*content);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    text::Sentence s;
    s.tokens = text::normalize_tokens(t);
    if (s.tokens.empty()) continue;
    s.raw = t;
    s.index = static_cast<int>(out.size());
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace lidetect::ner
