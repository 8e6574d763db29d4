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

#include "lidetect/registry.hpp"

#include <filesystem>
#include <stdexcept>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "lidetect/util.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace lidetect::registry {

namespace {

constexpr std::size_t kMaxMentionLength = 200;

// Extracts the trailing path segment of a license URL for the known hosts,
// e.g. "https://opensource.org/licenses/MIT" -> "MIT".
std::optional<std::string> url_license_slug(const std::string& lower) {
  static const char* kHosts[] = {
      "opensource.org/licenses/", "spdx.org/licenses/",
      "opensource.org/license/",
  };
  for (const char* host : kHosts) {
    std::size_t pos = lower.find(host);
    if (pos == std::string::npos) continue;
    std::string slug = lower.substr(pos + std::string(host).size());
    while (!slug.empty() && (slug.back() == '/' || slug.back() == '.')) {
      slug.pop_back();
    }
    std::size_t cut = slug.find_first_of("/?#");
    if (cut != std::string::npos) slug.erase(cut);
    // Drop a ".html"/".txt"/".php" suffix.
    std::size_t dot = slug.rfind('.');
    if (dot != std::string::npos) slug.erase(dot);
    if (!slug.empty()) return slug;
  }
  return std::nullopt;
}

std::string snapshot_key(const std::string& name,
                         const std::optional<std::string>& version) {
  return version.has_value() ? name + "@" + *version : name;
}

}  // namespace

SpdxDb SpdxDb::load(const std::string& dir) {
  fs::path base(dir);
  auto index_text = read_file((base / "index.json").string());
  if (!index_text) {
    throw std::runtime_error("cannot read spdx index: " +
                             (base / "index.json").string());
  }
  json index = json::parse(*index_text);
  SpdxDb db;
  for (const auto& row : index) {
    SpdxEntry entry;
    entry.id = row.at("id").get<std::string>();
    entry.name = row.at("name").get<std::string>();
    if (row.contains("aliases")) {
      for (const auto& a : row["aliases"]) {
        entry.aliases.push_back(a.get<std::string>());
      }
    }
    std::string file = row.at("file").get<std::string>();
    auto text = read_file((base / file).string());
    if (!text) {
      throw std::runtime_error("cannot read license text: " + file);
    }
    entry.canonical_text = fold_text(*text);
    if (collapse_whitespace(entry.canonical_text).empty()) {
      throw std::runtime_error("empty canonical text for " + entry.id);
    }
    db.entries_.push_back(std::move(entry));
  }
  for (std::size_t i = 0; i < db.entries_.size(); ++i) {
    const SpdxEntry& e = db.entries_[i];
    auto add_key = [&](const std::string& key) {
      std::string k = to_lower(collapse_whitespace(key));
      if (k.empty()) return;
      auto [it, inserted] = db.by_key_.emplace(k, i);
      if (!inserted && it->second != i) {
        throw std::runtime_error("alias collision across entries: " + key);
      }
    };
    add_key(e.id);
    add_key(e.name);
    for (const std::string& a : e.aliases) add_key(a);
  }
  return db;
}

const SpdxEntry* SpdxDb::find(const std::string& id) const {
  auto it = by_key_.find(to_lower(collapse_whitespace(id)));
  if (it == by_key_.end()) return nullptr;
  return &entries_[it->second];
}

const SpdxEntry* SpdxDb::match_mention(const std::string& mention) const {
  std::string key = to_lower(collapse_whitespace(mention));
  if (key.empty()) return nullptr;
  auto it = by_key_.find(key);
  if (it != by_key_.end()) return &entries_[it->second];
  if (auto slug = url_license_slug(key)) {
    auto sit = by_key_.find(*slug);
    if (sit != by_key_.end()) return &entries_[sit->second];
  }
  // Tolerate a trailing "license"/"the" dressing: "The MIT License" etc.
  std::string stripped = key;
  for (const char* noise : {"the ", "license", "licence"}) {
    std::size_t pos;
    while ((pos = stripped.find(noise)) != std::string::npos) {
      stripped.erase(pos, std::string(noise).size());
    }
  }
  stripped = collapse_whitespace(stripped);
  if (!stripped.empty() && stripped != key) {
    auto sit = by_key_.find(stripped);
    if (sit != by_key_.end()) return &entries_[sit->second];
  }
  return nullptr;
}

PackageIndexSnapshot PackageIndexSnapshot::load(const std::string& path) {
  auto content = read_file(path);
  if (!content) throw std::runtime_error("cannot read snapshot: " + path);
  return from_json_text(*content);
}

PackageIndexSnapshot PackageIndexSnapshot::from_json_text(
    const std::string& text) {
  PackageIndexSnapshot snap;
  json j = json::parse(text);
  for (auto it = j.begin(); it != j.end(); ++it) {
    SnapshotEntry entry;
    const json& v = it.value();
    if (v.contains("license_expr") && !v["license_expr"].is_null()) {
      entry.license_expr = v["license_expr"].get<std::string>();
    }
    if (v.contains("retrieved_at")) {
      entry.retrieved_at = v["retrieved_at"].get<std::string>();
    }
    snap.entries_[it.key()] = std::move(entry);
  }
  return snap;
}

std::string PackageIndexSnapshot::to_json_text() const {
  json j = json::object();
  for (const auto& [key, entry] : entries_) {
    json row = json::object();
    if (entry.license_expr.has_value()) {
      row["license_expr"] = *entry.license_expr;
    } else {
      row["license_expr"] = nullptr;
    }
    row["retrieved_at"] = entry.retrieved_at;
    j[key] = row;
  }
  return j.dump(2) + "\n";
}

bool PackageIndexSnapshot::save(const std::string& path) const {
  return write_file(path, to_json_text());
}

const SnapshotEntry* PackageIndexSnapshot::lookup(
    const std::string& name, const std::optional<std::string>& version) const {
  if (version.has_value()) {
    auto it = entries_.find(snapshot_key(name, version));
    if (it != entries_.end()) return &it->second;
  }
  auto it = entries_.find(name);
  if (it != entries_.end()) return &it->second;
  return nullptr;
}

void PackageIndexSnapshot::put(const std::string& name,
                               const std::optional<std::string>& version,
                               SnapshotEntry entry) {
  entries_[snapshot_key(name, version)] = std::move(entry);
}

HttpRemoteLookup::HttpRemoteLookup(std::string base_url)
    : base_url_(std::move(base_url)) {}

std::optional<std::string> HttpRemoteLookup::request(
    const std::string& name, const std::optional<std::string>& version) {
  httplib::Client client(base_url_);
  client.set_connection_timeout(10, 0);
  client.set_read_timeout(10, 0);
  std::string path = version.has_value()
                         ? "/pypi/" + name + "/" + *version + "/json"
                         : "/pypi/" + name + "/json";
  auto res = client.Get(path);
  if (!res) throw std::runtime_error("remote unavailable: " + base_url_);
  if (res->status == 404) return std::nullopt;
  if (res->status != 200) {
    throw std::runtime_error("remote error " + std::to_string(res->status));
  }
  json j = json::parse(res->body, nullptr, false);
  if (j.is_discarded()) return std::nullopt;
  if (j.contains("info") && j["info"].contains("license") &&
      j["info"]["license"].is_string()) {
    std::string lic = j["info"]["license"].get<std::string>();
    if (!trim(lic).empty()) return lic;
  }
  return std::nullopt;
}

std::optional<extract::LicenseInstance> resolve_reference(
    const std::string& ref_text, const SpdxDb& db) {
  if (ref_text.size() > kMaxMentionLength) return std::nullopt;
  const SpdxEntry* entry = db.match_mention(ref_text);
  if (entry == nullptr) return std::nullopt;
  extract::LicenseInstance inst;
  inst.kind = extract::LicenseKind::kReferenced;
  inst.origin = "spdx:" + entry->id;
  inst.text = entry->canonical_text;
  inst.role = extract::LicenseRole::kComponentLicense;
  return inst;
}

std::optional<extract::LicenseInstance> PackageResolver::resolve(
    const extract::PackageRef& ref, std::vector<std::string>* warnings) {
  const SnapshotEntry* hit = snapshot_->lookup(ref.name, ref.version);
  std::optional<std::string> expr;
  if (hit != nullptr) {
    expr = hit->license_expr;
  } else if (remote_ != nullptr) {
    std::string key = snapshot_key(ref.name, ref.version);
    if (attempted_.insert(key).second) {
      try {
        expr = remote_->request(ref.name, ref.version);
        SnapshotEntry entry;
        entry.license_expr = expr;
        entry.retrieved_at = "remote";
        snapshot_->put(ref.name, ref.version, std::move(entry));
      } catch (const std::exception& e) {
        if (warnings != nullptr) {
          warnings->push_back("remote lookup degraded for " + ref.name + ": " +
                              e.what());
        }
      }
    }
  }
  if (!expr.has_value() || trim(*expr).empty()) {
    if (warnings != nullptr) {
      warnings->push_back("no license found for package " + ref.name);
    }
    return std::nullopt;
  }
  std::string value = trim(*expr);
  // Composite SPDX expressions are out of scope; single ids only.
  std::string lower = to_lower(value);
  if (lower.find(" or ") != std::string::npos ||
      lower.find(" and ") != std::string::npos ||
      lower.find(" with ") != std::string::npos) {
    if (warnings != nullptr) {
      warnings->push_back("composite license expression for " + ref.name +
                          " not resolved: " + value);
    }
    return std::nullopt;
  }
  extract::LicenseInstance inst;
  inst.kind = extract::LicenseKind::kReferenced;
  inst.role = extract::LicenseRole::kComponentLicense;
  if (const SpdxEntry* entry = db_->match_mention(value)) {
    inst.origin = "pkg:" + snapshot_key(ref.name, ref.version) + ":" + entry->id;
    inst.text = entry->canonical_text;
    return inst;
  }
  if (value.size() > kMaxMentionLength) {
    // The index returned a full license text rather than an identifier.
    inst.origin = "pkg:" + snapshot_key(ref.name, ref.version);
    inst.text = fold_text(value);
    return inst;
  }
  if (warnings != nullptr) {
    warnings->push_back("unknown license identifier for " + ref.name + ": " +
                        value);
  }
  return std::nullopt;
}

}  // namespace lidetect::registry
