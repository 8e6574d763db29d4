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

#include "lidetect/report.hpp"

#include <sstream>

namespace lidetect::report {

using nlohmann::json;

namespace {

json instance_json(const extract::LicenseInstance& inst) {
  json j;
  j["origin"] = inst.origin;
  j["kind"] = extract::to_string(inst.kind);
  j["role"] = extract::to_string(inst.role);
  j["scope"] = inst.scope.has_value() ? json(*inst.scope) : json(nullptr);
  j["chars"] = inst.text.size();
  return j;
}

json conflict_json(const compat::ConflictRecord& c) {
  json j;
  j["term_id"] = c.term;
  j["term"] = std::string(term_info(c.term).name);
  j["rule"] = compat::to_string(c.rule);
  j["condition_case"] = c.condition_case.has_value()
                            ? json(compat::to_string(*c.condition_case))
                            : json(nullptr);
  j["left"] = {{"origin", c.left_origin},
               {"attitude", gram::to_string(c.left)},
               {"defaulted", c.left_defaulted}};
  j["right"] = {{"origin", c.right_origin},
                {"attitude", gram::to_string(c.right)},
                {"defaulted", c.right_defaulted}};
  return j;
}

json summary_json(const gram::LicenseSummary& s,
                  const compat::DefaultPolicy& policy) {
  json j;
  j["origin"] = s.origin;
  j["kind"] = extract::to_string(s.kind);
  j["role"] = extract::to_string(s.role);
  j["spdx_id"] = s.spdx_id.has_value() ? json(*s.spdx_id) : json(nullptr);
  compat::ConcreteSummary filled = compat::default_fill(s, policy);
  json attitudes = json::array();
  for (int t = 0; t < kNumTerms; ++t) {
    json a;
    a["id"] = t;
    a["term"] = std::string(term_info(t).name);
    a["value"] = gram::to_string(s.attitudes[static_cast<std::size_t>(t)]);
    a["effective"] =
        gram::to_string(filled.attitudes[static_cast<std::size_t>(t)]);
    a["defaulted"] = filled.defaulted[static_cast<std::size_t>(t)];
    json evidence = json::array();
    for (const gram::EvidenceRecord& e :
         s.evidence[static_cast<std::size_t>(t)]) {
      json ev;
      ev["sentence"] = e.sentence_index;
      ev["span"] = {e.begin, e.end};
      ev["text"] = e.entity_text;
      ev["attitude"] = gram::to_string(e.attitude);
      ev["internal_pts"] = e.internal_pts;
      ev["external_pts"] = e.external_pts;
      evidence.push_back(std::move(ev));
    }
    a["evidence"] = std::move(evidence);
    attitudes.push_back(std::move(a));
  }
  j["attitudes"] = std::move(attitudes);
  json conditions = json::array();
  for (const gram::TermCondition& c : s.conditions) {
    conditions.push_back({{"antecedent", c.antecedent_term},
                          {"consequent", c.consequent_term},
                          {"sentence", c.sentence_index}});
  }
  j["conditions"] = std::move(conditions);
  return j;
}

}  // namespace

json scan_document(const ScanResult& scan, const std::string& root) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["project"] = root;
  json instances = json::array();
  int declared = 0, inlined = 0, referenced = 0;
  for (const extract::LicenseInstance& inst : scan.instances) {
    instances.push_back(instance_json(inst));
    switch (inst.kind) {
      case extract::LicenseKind::kDeclared: ++declared; break;
      case extract::LicenseKind::kInline: ++inlined; break;
      case extract::LicenseKind::kReferenced: ++referenced; break;
    }
  }
  j["instances"] = std::move(instances);
  json refs = json::array();
  for (const extract::PackageRef& ref : scan.scan.package_refs) {
    refs.push_back({{"name", ref.name},
                    {"version", ref.version.has_value() ? json(*ref.version)
                                                        : json(nullptr)},
                    {"source_file", ref.source_file}});
  }
  j["package_refs"] = std::move(refs);
  j["stats"] = {{"instances", scan.instances.size()},
                {"declared", declared},
                {"inline", inlined},
                {"referenced", referenced},
                {"package_refs", scan.scan.package_refs.size()},
                {"warnings", scan.warnings.size()}};
  j["summaries"] = json::array();
  j["conflicts"] = json::array();
  j["verdict"] = nullptr;
  j["warnings"] = scan.warnings;
  return j;
}

json analysis_document(const AnalysisResult& result) {
  const compat::ProjectReport& report = result.report;
  json j;
  j["schema_version"] = kSchemaVersion;
  j["project"] = report.project;
  json summaries = json::array();
  // The policy actually applied lives in the report's concrete views; the
  // document recomputes effective attitudes with the same policy.
  for (const gram::LicenseSummary& s : result.summaries) {
    summaries.push_back(summary_json(s, result.policy));
  }
  j["summaries"] = std::move(summaries);
  json conflicts = json::array();
  for (const compat::ConflictRecord& c : report.conflicts) {
    conflicts.push_back(conflict_json(c));
  }
  j["conflicts"] = std::move(conflicts);
  j["verdict"] = {{"incompatible", report.incompatible},
                  {"pairs_checked", report.pairs_checked}};
  j["stats"] = {{"instances", result.scan.instances.size()},
                {"package_refs", result.scan.scan.package_refs.size()},
                {"pairs_checked", report.pairs_checked},
                {"conflicts", report.conflicts.size()},
                {"warnings", report.warnings.size()}};
  j["warnings"] = report.warnings;
  return j;
}

std::string to_json_text(const json& doc) { return doc.dump(2) + "\n"; }

std::string to_text(const json& doc) {
  std::ostringstream out;
  out << "project: " << doc.value("project", std::string("?")) << "\n";
  if (doc.contains("instances")) {
    out << "licenses (" << doc["instances"].size() << "):\n";
    for (const auto& inst : doc["instances"]) {
      out << "  [" << inst["kind"].get<std::string>() << "/"
          << inst["role"].get<std::string>() << "] "
          << inst["origin"].get<std::string>() << "\n";
    }
  }
  if (doc.contains("summaries")) {
    for (const auto& s : doc["summaries"]) {
      out << "license " << s["origin"].get<std::string>() << " ("
          << s["role"].get<std::string>() << ")";
      if (!s["spdx_id"].is_null()) {
        out << " = " << s["spdx_id"].get<std::string>();
      }
      out << "\n";
      for (const auto& a : s["attitudes"]) {
        if (a["value"].get<std::string>() == "UNKNOWN") continue;
        out << "  " << a["value"].get<std::string>() << " "
            << a["term"].get<std::string>() << "\n";
      }
    }
  }
  if (doc.contains("conflicts") && !doc["conflicts"].empty()) {
    out << "conflicts:\n";
    for (const auto& c : doc["conflicts"]) {
      out << "  " << c["term"].get<std::string>() << ": "
          << c["left"]["origin"].get<std::string>() << " "
          << c["left"]["attitude"].get<std::string>() << " vs "
          << c["right"]["origin"].get<std::string>() << " "
          << c["right"]["attitude"].get<std::string>() << "\n";
    }
  }
  if (doc.contains("verdict") && !doc["verdict"].is_null()) {
    out << (doc["verdict"]["incompatible"].get<bool>() ? "INCOMPATIBLE"
                                                       : "COMPATIBLE")
        << "\n";
  }
  return out.str();
}

}  // namespace lidetect::report
