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

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lidetect/analyzer.hpp"
#include "lidetect/report.hpp"
#include "lidetect/train.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIncompatible = 1;
constexpr int kExitError = 2;

struct CommonOptions {
  std::string root;
  std::optional<std::string> config_path;
  std::optional<std::string> spdx_db;
  std::optional<std::string> snapshot;
  std::optional<std::string> lexicon;
  std::string format = "json";
  bool offline = false;
  std::string remote_url = "https://pypi.org";
};

void add_common(CLI::App* cmd, CommonOptions* opts, bool with_root = true) {
  if (with_root) {
    cmd->add_option("root", opts->root, "Project directory to scan")
        ->required();
  }
  cmd->add_option("--config", opts->config_path, "Scan config JSON file");
  cmd->add_option("--spdx-db", opts->spdx_db,
                  "SPDX snapshot directory (falls back to LIDETECT_SPDX_DB)");
  cmd->add_option("--snapshot", opts->snapshot,
                  "Package-index snapshot JSON file");
  cmd->add_option("--lexicon", opts->lexicon, "Attitude lexicon JSON file");
  cmd->add_option("--format", opts->format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_flag("--offline", opts->offline, "Never issue remote lookups");
  cmd->add_option("--remote-url", opts->remote_url,
                  "Package index base URL for remote lookups");
}

lidetect::AnalysisOptions build_options(const CommonOptions& common,
                                        const lidetect::compat::DefaultPolicy& policy) {
  lidetect::AnalysisOptions options;
  if (common.config_path.has_value()) {
    options.scan_config = lidetect::extract::load_scan_config(*common.config_path);
  }
  options.policy = policy;
  options.spdx_db_path = common.spdx_db;
  options.snapshot_path = common.snapshot;
  options.lexicon_path = common.lexicon;
  options.offline = common.offline;
  options.remote_base_url = common.remote_url;
  return options;
}

void emit(const nlohmann::json& doc, const std::string& format) {
  if (format == "text") {
    std::cout << lidetect::report::to_text(doc);
  } else {
    std::cout << lidetect::report::to_json_text(doc);
  }
}

lidetect::gram::AttitudeLexicon load_lexicon(
    const std::optional<std::string>& path) {
  if (path.has_value()) return lidetect::gram::AttitudeLexicon::load(*path);
  return lidetect::gram::AttitudeLexicon::defaults();
}

int cmd_scan(const CommonOptions& common) {
  lidetect::AnalysisOptions options =
      build_options(common, lidetect::compat::DefaultPolicy{});
  std::vector<std::string> warnings;
  lidetect::registry::SpdxDb db =
      lidetect::load_spdx_db(options.spdx_db_path, &warnings);
  lidetect::ScanResult scan = lidetect::run_scan(common.root, options, db);
  scan.warnings.insert(scan.warnings.begin(), warnings.begin(), warnings.end());
  emit(lidetect::report::scan_document(scan, common.root), common.format);
  return kExitOk;
}

int cmd_analyze(const CommonOptions& common, const std::string& model_path,
                const std::string& absent_right,
                const std::string& absent_obligation) {
  lidetect::compat::DefaultPolicy policy;
  policy.absent_right = absent_right == "can"
                            ? lidetect::gram::Attitude::kCan
                            : lidetect::gram::Attitude::kCannot;
  policy.absent_obligation = absent_obligation == "cannot"
                                 ? lidetect::gram::Attitude::kCannot
                                 : lidetect::gram::Attitude::kCan;
  lidetect::AnalysisOptions options = build_options(common, policy);
  std::vector<std::string> warnings;
  lidetect::registry::SpdxDb db =
      lidetect::load_spdx_db(options.spdx_db_path, &warnings);
  lidetect::ner::SequenceModel model =
      lidetect::ner::SequenceModel::load(model_path);
  lidetect::gram::AttitudeLexicon lexicon = load_lexicon(common.lexicon);
  lidetect::AnalysisResult result =
      lidetect::run_analysis(common.root, options, db, model, lexicon);
  result.report.warnings.insert(result.report.warnings.begin(),
                                warnings.begin(), warnings.end());
  emit(lidetect::report::analysis_document(result), common.format);
  return result.report.incompatible ? kExitIncompatible : kExitOk;
}

int cmd_train(const std::string& corpus_path,
              const std::optional<std::string>& unlabeled_path,
              const lidetect::ner::TrainConfig& config,
              const std::string& out_path) {
  lidetect::ner::TrainingCorpus corpus;
  corpus.labeled = lidetect::ner::load_tsv(corpus_path);
  if (unlabeled_path.has_value()) {
    corpus.unlabeled = lidetect::ner::load_unlabeled(*unlabeled_path);
  }
  lidetect::ner::SequenceModel model = lidetect::ner::train(corpus, config);
  if (!model.save(out_path)) {
    throw std::runtime_error("cannot write model: " + out_path);
  }
  std::cout << "model written to " << out_path << " ("
            << model.feature_weights().size() << " features)\n";
  return kExitOk;
}

int cmd_eval(const std::string& model_path, const std::string& testset_path) {
  lidetect::ner::SequenceModel model =
      lidetect::ner::SequenceModel::load(model_path);
  std::vector<lidetect::ner::LabeledSentence> testset =
      lidetect::ner::load_tsv(testset_path);
  lidetect::ner::Metrics m = lidetect::ner::evaluate(model, testset);
  std::cout << "precision: " << m.precision << "\n"
            << "recall: " << m.recall << "\n"
            << "f1: " << m.f1 << "\n";
  return kExitOk;
}

int cmd_explain(const CommonOptions& common, const std::string& model_path,
                const std::string& term_name) {
  auto term = lidetect::term_by_name(term_name);
  if (!term.has_value()) {
    std::cerr << "unknown term: " << term_name << "\n";
    return kExitError;
  }
  lidetect::AnalysisOptions options =
      build_options(common, lidetect::compat::DefaultPolicy{});
  std::vector<std::string> warnings;
  lidetect::registry::SpdxDb db =
      lidetect::load_spdx_db(options.spdx_db_path, &warnings);
  lidetect::ner::SequenceModel model =
      lidetect::ner::SequenceModel::load(model_path);
  lidetect::gram::AttitudeLexicon lexicon = load_lexicon(common.lexicon);
  lidetect::AnalysisResult result =
      lidetect::run_analysis(common.root, options, db, model, lexicon);

  const auto& info = lidetect::term_info(*term);
  std::cout << "term " << info.id << ": " << info.name << "\n";
  for (const auto& summary : result.summaries) {
    std::cout << "license " << summary.origin << " ("
              << lidetect::extract::to_string(summary.role) << ")";
    if (summary.spdx_id.has_value()) std::cout << " = " << *summary.spdx_id;
    std::cout << "\n  attitude: "
              << lidetect::gram::to_string(
                     summary.attitudes[static_cast<std::size_t>(*term)])
              << "\n";
    for (const auto& e : summary.evidence[static_cast<std::size_t>(*term)]) {
      std::cout << "  sentence " << e.sentence_index << ": \"" << e.entity_text
                << "\" -> " << lidetect::gram::to_string(e.attitude) << "\n";
      std::cout << "    internal PTs:";
      for (const auto& p : e.internal_pts) std::cout << " " << p;
      std::cout << "\n    external PTs:";
      for (const auto& p : e.external_pts) std::cout << " " << p;
      std::cout << "\n";
    }
    for (const auto& c : summary.conditions) {
      if (c.antecedent_term == *term || c.consequent_term == *term) {
        std::cout << "  condition: "
                  << lidetect::term_info(c.antecedent_term).name << " -> "
                  << lidetect::term_info(c.consequent_term).name
                  << " (sentence " << c.sentence_index << ")\n";
      }
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"License extraction, interpretation and incompatibility detection"};
  app.require_subcommand(1);

  CommonOptions scan_opts;
  CLI::App* scan = app.add_subcommand("scan", "Extract licenses from a project");
  add_common(scan, &scan_opts);

  CommonOptions analyze_opts;
  std::string model_path;
  std::string absent_right = "cannot";
  std::string absent_obligation = "can";
  CLI::App* analyze =
      app.add_subcommand("analyze", "Detect license incompatibility");
  add_common(analyze, &analyze_opts);
  analyze->add_option("--model", model_path, "Sequence model JSON file")
      ->required();
  analyze
      ->add_option("--default-absent-right", absent_right,
                   "Attitude assumed for unmentioned rights")
      ->check(CLI::IsMember({"cannot", "can"}));
  analyze
      ->add_option("--default-absent-obligation", absent_obligation,
                   "Attitude assumed for unmentioned obligations")
      ->check(CLI::IsMember({"can", "cannot"}));

  std::string corpus_path, train_out;
  std::optional<std::string> unlabeled_path;
  lidetect::ner::TrainConfig train_config;
  CLI::App* train = app.add_subcommand("train", "Train the term tagger");
  train->add_option("--corpus", corpus_path, "Labeled TSV corpus")->required();
  train->add_option("--unlabeled", unlabeled_path,
                    "Unlabeled sentences, one per line");
  train->add_flag("--semi-supervised", train_config.semi_supervised,
                  "Enable the pseudo-labeling phase");
  train->add_option("--l2", train_config.l2, "L2 regularization strength");
  train->add_option("--iterations", train_config.max_iterations,
                    "Maximum optimizer iterations");
  train->add_option("--pseudo-threshold", train_config.pseudo_threshold,
                    "Minimum per-token confidence for pseudo labels");
  train->add_option("--seed", train_config.seed, "Deterministic seed");
  train->add_option("-o,--out", train_out, "Output model path")->required();

  std::string eval_model, eval_testset;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate a model on a testset");
  eval->add_option("--model", eval_model, "Model JSON file")->required();
  eval->add_option("--testset", eval_testset, "Labeled TSV testset")->required();

  CommonOptions explain_opts;
  std::string explain_model, explain_term;
  CLI::App* explain =
      app.add_subcommand("explain", "Show per-term evidence for a project");
  add_common(explain, &explain_opts);
  explain->add_option("--model", explain_model, "Model JSON file")->required();
  explain->add_option("--term", explain_term, "Term name or id")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (scan->parsed()) return cmd_scan(scan_opts);
    if (analyze->parsed()) {
      return cmd_analyze(analyze_opts, model_path, absent_right,
                         absent_obligation);
    }
    if (train->parsed()) {
      return cmd_train(corpus_path, unlabeled_path, train_config, train_out);
    }
    if (eval->parsed()) return cmd_eval(eval_model, eval_testset);
    if (explain->parsed()) {
      return cmd_explain(explain_opts, explain_model, explain_term);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
