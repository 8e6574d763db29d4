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

#include "lidetect/analyzer.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "lidetect/util.hpp"

namespace lidetect {

namespace {

constexpr std::size_t kMentionLimit = 200;

}  // namespace

registry::SpdxDb load_spdx_db(const std::optional<std::string>& path,
                              std::vector<std::string>* warnings) {
  std::string dir;
  if (path.has_value()) {
    dir = *path;
  } else if (const char* env = std::getenv("LIDETECT_SPDX_DB")) {
    dir = env;
  }
  if (dir.empty()) {
    if (warnings != nullptr) {
      warnings->push_back(
          "no SPDX db configured (--spdx-db or LIDETECT_SPDX_DB); official "
          "license matching disabled");
    }
    return registry::SpdxDb::empty();
  }
  return registry::SpdxDb::load(dir);
}

ScanResult run_scan(const std::string& root, const AnalysisOptions& options,
                    const registry::SpdxDb& db) {
  ScanResult result;
  result.scan = extract::scan_project(root, options.scan_config);
  result.warnings = result.scan.warnings;

  // Short declared/inline texts that are really license mentions resolve to
  // the canonical text but keep their origin and role.
  std::set<std::string> seen_texts;
  for (const extract::LicenseInstance& inst : result.scan.instances) {
    extract::LicenseInstance resolved = inst;
    if (inst.text.size() <= kMentionLimit) {
      if (auto hit = registry::resolve_reference(inst.text, db)) {
        resolved.kind = extract::LicenseKind::kReferenced;
        resolved.text = hit->text;
        result.warnings.push_back("resolved mention in " + inst.origin +
                                  " to " + hit->origin);
      }
    }
    result.instances.push_back(std::move(resolved));
  }
  for (const extract::LicenseInstance& inst : result.instances) {
    if (inst.kind == extract::LicenseKind::kReferenced) {
      seen_texts.insert(collapse_whitespace(inst.text));
    }
  }

  registry::PackageIndexSnapshot snapshot;
  if (options.snapshot_path.has_value()) {
    snapshot = registry::PackageIndexSnapshot::load(*options.snapshot_path);
  }
  std::unique_ptr<registry::RemoteLookup> remote;
  if (!options.offline) {
    remote = std::make_unique<registry::HttpRemoteLookup>(
        options.remote_base_url);
  }
  registry::PackageResolver resolver(&snapshot, &db, remote.get());
  for (const extract::PackageRef& ref : result.scan.package_refs) {
    auto inst = resolver.resolve(ref, &result.warnings);
    if (!inst.has_value()) continue;
    // Identical referenced texts collapse, mirroring the scan-level dedup.
    if (!seen_texts.insert(collapse_whitespace(inst->text)).second) {
      result.warnings.push_back("duplicate license text: " + inst->origin);
      continue;
    }
    result.instances.push_back(std::move(*inst));
  }
  std::sort(result.instances.begin(), result.instances.end(),
            [](const extract::LicenseInstance& a,
               const extract::LicenseInstance& b) { return a.origin < b.origin; });
  return result;
}

AnalysisResult run_analysis(const std::string& root,
                            const AnalysisOptions& options,
                            const registry::SpdxDb& db,
                            const ner::SequenceModel& model,
                            const gram::AttitudeLexicon& lexicon) {
  AnalysisResult result;
  result.policy = options.policy;
  result.scan = run_scan(root, options, db);

  for (const extract::LicenseInstance& inst : result.scan.instances) {
    gram::LicenseSummary summary = gram::summarize(inst, model, lexicon);
    official::MatchResult match = official::match_official(inst.text, db);
    if (match.kind != official::MatchKind::kNoMatch) {
      summary.spdx_id = match.spdx_id;
      if (match.kind == official::MatchKind::kContainsOfficial) {
        summary.warnings.push_back("official " + match.spdx_id +
                                   " plus custom residual text");
      }
    }
    result.summaries.push_back(std::move(summary));
  }
  result.report =
      compat::analyze_project(root, result.summaries, options.policy);
  result.report.warnings.insert(result.report.warnings.begin(),
                                result.scan.warnings.begin(),
                                result.scan.warnings.end());
  return result;
}

}  // namespace lidetect
