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

#ifndef LIDETECT_ANALYZER_HPP_
#define LIDETECT_ANALYZER_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lidetect/compat.hpp"
#include "lidetect/official.hpp"
#include "lidetect/registry.hpp"

namespace lidetect {

struct AnalysisOptions {
  extract::ScanConfig scan_config;
  compat::DefaultPolicy policy;
  std::optional<std::string> spdx_db_path;
  std::optional<std::string> snapshot_path;
  std::optional<std::string> lexicon_path;
  bool offline = true;
  std::string remote_base_url = "https://pypi.org";
};

struct ScanResult {
  extract::ProjectScan scan;
  // Scanned instances after reference resolution (short mentions replaced by
  // canonical texts, package licenses appended), sorted by origin.
  std::vector<extract::LicenseInstance> instances;
  std::vector<std::string> warnings;
};

struct AnalysisResult {
  ScanResult scan;
  std::vector<gram::LicenseSummary> summaries;
  compat::ProjectReport report;
  compat::DefaultPolicy policy;
};

// Extraction plus registry resolution. Throws extract::RootNotFound.
ScanResult run_scan(const std::string& root, const AnalysisOptions& options,
                    const registry::SpdxDb& db);

// Full pipeline: scan, resolve, summarize each instance (officials are
// identified via match_official and recorded by spdx id), analyze pairs.
AnalysisResult run_analysis(const std::string& root,
                            const AnalysisOptions& options,
                            const registry::SpdxDb& db,
                            const ner::SequenceModel& model,
                            const gram::AttitudeLexicon& lexicon);

// Loads the db named by `path`, else the LIDETECT_SPDX_DB environment
// variable, else returns an empty db with a warning.
registry::SpdxDb load_spdx_db(const std::optional<std::string>& path,
                              std::vector<std::string>* warnings);

}  // namespace lidetect

#endif  // LIDETECT_ANALYZER_HPP_
