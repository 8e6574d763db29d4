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

#ifndef LIDETECT_EXTRACT_HPP_
#define LIDETECT_EXTRACT_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lidetect::extract {

enum class LicenseKind { kDeclared, kReferenced, kInline };
enum class LicenseRole { kProjectLicense, kComponentLicense };

std::string to_string(LicenseKind k);
std::string to_string(LicenseRole r);

// One license found in a project. `origin` is a path relative to the scan
// root or a registry identifier; inline licenses carry the containing file
// in `scope`.
struct LicenseInstance {
  LicenseKind kind = LicenseKind::kDeclared;
  std::string origin;
  std::string text;  // normalized, non-empty
  LicenseRole role = LicenseRole::kComponentLicense;
  std::optional<std::string> scope;
};

struct PackageRef {
  std::string name;
  std::optional<std::string> version;
  std::string source_file;
};

struct ProjectScan {
  std::string root;
  std::vector<LicenseInstance> instances;
  std::vector<PackageRef> package_refs;
  std::vector<std::string> warnings;
};

struct ScanConfig {
  std::vector<std::string> declared_names = {"license", "licence", "copying",
                                             "copyright", "notice"};
  std::vector<std::string> declared_extensions = {"", ".txt", ".md", ".rst"};
  std::vector<std::string> source_extensions = {".py", ".rs", ".c", ".h",
                                                ".js", ".go", ".java"};
  std::vector<std::string> manifest_globs = {"requirements*.txt", "Cargo.toml",
                                             "pyproject.toml"};
  bool scan_imports = false;
};

// Loads a ScanConfig from its JSON form:
//   {"declared_names": [...], "source_extensions": [...],
//    "manifest_globs": [...], "scan_imports": false}
// Missing keys keep their defaults. Throws std::runtime_error on bad JSON.
ScanConfig load_scan_config(const std::string& path);

struct RootNotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Walks the tree and collects declared, inline and manifest-referenced
// licenses. Per-file IO errors become warnings, never aborts. Deterministic:
// instances ordered lexicographically by origin, byte-identical texts
// deduplicated within a kind (duplicate origins recorded as warnings).
ProjectScan scan_project(const std::string& root, const ScanConfig& config);

// The individual collectors, exposed for targeted use. Origins they produce
// are relative to `root`.
std::vector<LicenseInstance> extract_declared(const std::string& root,
                                              const ScanConfig& config,
                                              std::vector<std::string>* warnings);
std::vector<LicenseInstance> extract_inline(const std::string& root,
                                            const std::string& file,
                                            const ScanConfig& config,
                                            std::vector<std::string>* warnings);
std::vector<PackageRef> collect_package_refs(const std::string& root,
                                             const ScanConfig& config,
                                             std::vector<std::string>* warnings);

// True when `filename` (no directory) matches the declared-name set, e.g.
// "LICENSE", "license.MD", "Copying.txt".
bool matches_declared_name(const std::string& filename,
                           const ScanConfig& config);

}  // namespace lidetect::extract

#endif  // LIDETECT_EXTRACT_HPP_
