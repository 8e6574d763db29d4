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

#ifndef LIDETECT_REGISTRY_HPP_
#define LIDETECT_REGISTRY_HPP_

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lidetect/extract.hpp"

namespace lidetect::registry {

struct SpdxEntry {
  std::string id;
  std::string name;
  std::string canonical_text;  // normalized, non-empty
  std::vector<std::string> aliases;
};

// Local snapshot of official license texts. Loaded from a directory holding
// an index JSON ([{"id","name","aliases","file"}, ...]) plus one text file
// per entry. Read-only after load.
class SpdxDb {
 public:
  static SpdxDb load(const std::string& dir);
  static SpdxDb empty() { return SpdxDb(); }

  const SpdxEntry* find(const std::string& id) const;
  // Case-insensitive match over ids, names, aliases and URL patterns.
  const SpdxEntry* match_mention(const std::string& mention) const;

  const std::vector<SpdxEntry>& entries() const { return entries_; }
  bool empty_db() const { return entries_.empty(); }

 private:
  std::vector<SpdxEntry> entries_;
  std::map<std::string, std::size_t> by_key_;  // lowercased id/name/alias
};

struct SnapshotEntry {
  std::optional<std::string> license_expr;  // spdx id or raw text
  std::string retrieved_at;
};

// Offline package-index snapshot: {"name" or "name@version": entry}.
// A versioned lookup falls back to the versionless entry.
class PackageIndexSnapshot {
 public:
  static PackageIndexSnapshot load(const std::string& path);
  static PackageIndexSnapshot from_json_text(const std::string& text);

  std::string to_json_text() const;
  bool save(const std::string& path) const;

  const SnapshotEntry* lookup(const std::string& name,
                              const std::optional<std::string>& version) const;
  void put(const std::string& name, const std::optional<std::string>& version,
           SnapshotEntry entry);

  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, SnapshotEntry> entries_;
};

// Remote resolution contract: one request per (name, version).
class RemoteLookup {
 public:
  virtual ~RemoteLookup() = default;
  // Returns the license expression or text, or nullopt on miss.
  // Throws std::runtime_error when the remote is unavailable.
  virtual std::optional<std::string> request(
      const std::string& name, const std::optional<std::string>& version) = 0;
};

// Queries a package-index JSON API (GET {base}/pypi/{name}/json by default)
// and extracts the declared license. 10 s timeout.
class HttpRemoteLookup : public RemoteLookup {
 public:
  explicit HttpRemoteLookup(std::string base_url);
  std::optional<std::string> request(
      const std::string& name,
      const std::optional<std::string>& version) override;

 private:
  std::string base_url_;
};

// Maps a short license mention (name, id or URL) to a Referenced instance
// carrying the canonical text. Pure function of (ref_text, db).
std::optional<extract::LicenseInstance> resolve_reference(
    const std::string& ref_text, const SpdxDb& db);

// Resolves a package to its license: snapshot first, then at most one remote
// call, cached back into the snapshot. Misses and degraded remotes become
// warnings.
class PackageResolver {
 public:
  PackageResolver(PackageIndexSnapshot* snapshot, const SpdxDb* db,
                  RemoteLookup* remote)
      : snapshot_(snapshot), db_(db), remote_(remote) {}

  std::optional<extract::LicenseInstance> resolve(
      const extract::PackageRef& ref, std::vector<std::string>* warnings);

 private:
  PackageIndexSnapshot* snapshot_;
  const SpdxDb* db_;
  RemoteLookup* remote_;  // may be null (offline)
  std::set<std::string> attempted_;
};

}  // namespace lidetect::registry

#endif  // LIDETECT_REGISTRY_HPP_
