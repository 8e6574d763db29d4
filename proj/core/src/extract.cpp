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

#include "lidetect/extract.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lidetect/text.hpp"
#include "lidetect/util.hpp"

namespace fs = std::filesystem;

namespace lidetect::extract {

namespace {

// Normalizes license text for storage: folded punctuation, \n line endings,
// no trailing spaces, at most one blank line in a row.
std::string normalize_license_text(std::string_view raw) {
  std::string folded = fold_text(raw);
  std::ostringstream out;
  std::istringstream in(folded);
  std::string line;
  int pending_blank = 0;
  bool wrote_any = false;
  while (std::getline(in, line)) {
    while (!line.empty() &&
           std::isspace(static_cast<unsigned char>(line.back()))) {
      line.pop_back();
    }
    if (line.empty()) {
      if (wrote_any) pending_blank = 1;
      continue;
    }
    if (wrote_any) {
      out << '\n';
      if (pending_blank) out << '\n';
    }
    pending_blank = 0;
    out << line;
    wrote_any = true;
  }
  return out.str();
}

std::string relative_origin(const fs::path& root, const fs::path& p) {
  std::error_code ec;
  fs::path rel = fs::relative(p, root, ec);
  std::string s = ec ? p.generic_string() : rel.generic_string();
  return s.empty() ? p.generic_string() : s;
}

bool glob_match(std::string_view pattern, std::string_view name) {
  // '*' wildcard only; case-sensitive, enough for manifest names.
  std::size_t p = 0, s = 0, star = std::string_view::npos, mark = 0;
  while (s < name.size()) {
    if (p < pattern.size() && (pattern[p] == name[s])) {
      ++p;
      ++s;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = s;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      s = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

bool has_source_extension(const fs::path& p, const ScanConfig& config) {
  std::string ext = to_lower(p.extension().string());
  return std::find(config.source_extensions.begin(),
                   config.source_extensions.end(),
                   ext) != config.source_extensions.end();
}

const std::vector<std::string>& cue_stems() {
  static const std::vector<std::string> cues = [] {
    std::vector<std::string> out;
    for (const char* cue :
         {"license", "copyright", "permission", "warranty", "redistribut"}) {
      out.push_back(text::stem(cue));
    }
    return out;
  }();
  return cues;
}

bool contains_license_cue(const std::string& block) {
  for (const text::Token& t : text::normalize_tokens(block)) {
    for (const std::string& cue : cue_stems()) {
      if (t.stem == cue) return true;
    }
  }
  return false;
}

// Extracts the leading comment block of a source file: every comment line
// before the first non-comment, non-blank line.
std::string leading_comment_block(const std::string& content,
                                  const std::string& ext) {
  bool hash_style = ext == ".py";
  std::ostringstream block;
  std::istringstream in(content);
  std::string line;
  bool in_block_comment = false;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (in_block_comment) {
      std::size_t close = t.find("*/");
      std::string body = close == std::string::npos ? t : t.substr(0, close);
      while (!body.empty() && (body.front() == '*' || body.front() == ' ')) {
        body.erase(body.begin());
      }
      block << body << '\n';
      if (close != std::string::npos) in_block_comment = false;
      continue;
    }
    if (t.empty()) continue;
    if (hash_style && t[0] == '#') {
      std::size_t b = t.find_first_not_of("#! ");
      block << (b == std::string::npos ? "" : t.substr(b)) << '\n';
      continue;
    }
    if (!hash_style && t.rfind("//", 0) == 0) {
      std::size_t b = t.find_first_not_of("/ ");
      block << (b == std::string::npos ? "" : t.substr(b)) << '\n';
      continue;
    }
    if (!hash_style && t.rfind("/*", 0) == 0) {
      std::string body = t.substr(2);
      std::size_t close = body.find("*/");
      if (close != std::string::npos) {
        block << trim(body.substr(0, close)) << '\n';
      } else {
        block << trim(body) << '\n';
        in_block_comment = true;
      }
      continue;
    }
    break;  // first non-comment, non-blank line ends the leading block
  }
  return block.str();
}

bool is_version_string(const std::string& v) {
  if (v.empty()) return false;
  for (char c : v) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '-' &&
        c != '+' && c != '_' && c != '*') {
      return false;
    }
  }
  return true;
}

bool is_package_name(const std::string& n) {
  if (n.empty()) return false;
  for (char c : n) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '-' &&
        c != '_') {
      return false;
    }
  }
  return true;
}

void parse_requirements_lines(const std::string& content,
                              const std::string& origin,
                              std::vector<PackageRef>* out,
                              std::vector<std::string>* warnings) {
  std::istringstream in(content);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    std::string name;
    std::optional<std::string> version;
    std::size_t eq = t.find("==");
    if (eq != std::string::npos) {
      name = trim(t.substr(0, eq));
      version = trim(t.substr(eq + 2));
    } else {
      name = t;
    }
    // Strip an extras suffix like "pkg[extra]".
    std::size_t bracket = name.find('[');
    if (bracket != std::string::npos && name.back() == ']') {
      name.erase(bracket);
    }
    if (!is_package_name(name) ||
        (version.has_value() && !is_version_string(*version))) {
      if (warnings != nullptr) {
        warnings->push_back("malformed manifest line " + origin + ":" +
                            std::to_string(lineno));
      }
      continue;
    }
    out->push_back(PackageRef{name, version, origin});
  }
}

void parse_dependency_table(const std::string& content,
                            const std::string& origin,
                            std::vector<PackageRef>* out,
                            std::vector<std::string>* warnings) {
  std::istringstream in(content);
  std::string line;
  int lineno = 0;
  bool in_deps = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[') {
      in_deps = to_lower(t).find("dependencies]") != std::string::npos;
      continue;
    }
    if (!in_deps) continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      if (warnings != nullptr) {
        warnings->push_back("malformed manifest line " + origin + ":" +
                            std::to_string(lineno));
      }
      continue;
    }
    std::string name = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    // Accept `pkg = "1.0"` and `pkg = { version = "1.0", ... }`.
    std::optional<std::string> version;
    std::size_t vkey = value.find("version");
    if (value.rfind('{', 0) == 0 && vkey != std::string::npos) {
      value = value.substr(vkey + 7);
    }
    std::size_t q1 = value.find('"');
    if (q1 != std::string::npos) {
      std::size_t q2 = value.find('"', q1 + 1);
      if (q2 != std::string::npos) version = value.substr(q1 + 1, q2 - q1 - 1);
    }
    if (!is_package_name(name) || !version.has_value() ||
        !is_version_string(*version)) {
      if (warnings != nullptr) {
        warnings->push_back("malformed manifest line " + origin + ":" +
                            std::to_string(lineno));
      }
      continue;
    }
    out->push_back(PackageRef{name, version, origin});
  }
}

void scan_python_imports(const std::string& content, const std::string& origin,
                         std::vector<PackageRef>* out) {
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    std::string name;
    if (t.rfind("import ", 0) == 0) {
      name = t.substr(7);
    } else if (t.rfind("from ", 0) == 0) {
      std::size_t sp = t.find(' ', 5);
      name = t.substr(5, sp == std::string::npos ? std::string::npos : sp - 5);
    } else {
      continue;
    }
    std::size_t cut = name.find_first_of(" .,;(");
    if (cut != std::string::npos) name.erase(cut);
    name = trim(name);
    if (is_package_name(name) && !name.empty()) {
      out->push_back(PackageRef{name, std::nullopt, origin});
    }
  }
}

std::vector<fs::path> sorted_regular_files(const fs::path& root,
                                           std::vector<std::string>* warnings) {
  std::vector<fs::path> files;
  std::error_code ec;
  fs::recursive_directory_iterator it(
      root, fs::directory_options::skip_permission_denied, ec);
  if (ec && warnings != nullptr) {
    warnings->push_back("io error: " + root.string() + ": " + ec.message());
  }
  for (auto end = fs::recursive_directory_iterator(); it != end;
       it.increment(ec)) {
    if (ec) {
      if (warnings != nullptr) {
        warnings->push_back("io error while walking: " + ec.message());
      }
      break;
    }
    const fs::path& p = it->path();
    std::string name = p.filename().string();
    if (it->is_directory() &&
        (name == ".git" || name == ".hg" || name == ".svn")) {
      it.disable_recursion_pending();
      continue;
    }
    if (it->is_symlink()) continue;
    if (it->is_regular_file()) files.push_back(p);
  }
  std::sort(files.begin(), files.end(), [&](const fs::path& a, const fs::path& b) {
    return relative_origin(root, a) < relative_origin(root, b);
  });
  return files;
}

}  // namespace

std::string to_string(LicenseKind k) {
  switch (k) {
    case LicenseKind::kDeclared:
      return "declared";
    case LicenseKind::kReferenced:
      return "referenced";
    case LicenseKind::kInline:
      return "inline";
  }
  return "unknown";
}

std::string to_string(LicenseRole r) {
  return r == LicenseRole::kProjectLicense ? "PL" : "CL";
}

ScanConfig load_scan_config(const std::string& path) {
  auto content = read_file(path);
  if (!content) throw std::runtime_error("cannot read scan config: " + path);
  nlohmann::json j = nlohmann::json::parse(*content);
  ScanConfig config;
  if (j.contains("declared_names")) {
    config.declared_names.clear();
    for (const auto& v : j["declared_names"]) {
      config.declared_names.push_back(to_lower(v.get<std::string>()));
    }
  }
  if (j.contains("source_extensions")) {
    config.source_extensions.clear();
    for (const auto& v : j["source_extensions"]) {
      config.source_extensions.push_back(to_lower(v.get<std::string>()));
    }
  }
  if (j.contains("manifest_globs")) {
    config.manifest_globs.clear();
    for (const auto& v : j["manifest_globs"]) {
      config.manifest_globs.push_back(v.get<std::string>());
    }
  }
  if (j.contains("scan_imports")) {
    config.scan_imports = j["scan_imports"].get<bool>();
  }
  return config;
}

bool matches_declared_name(const std::string& filename,
                           const ScanConfig& config) {
  std::string lower = to_lower(filename);
  for (const std::string& name : config.declared_names) {
    std::string n = to_lower(name);
    if (lower.rfind(n, 0) != 0) continue;
    std::string rest = lower.substr(n.size());
    for (const std::string& ext : config.declared_extensions) {
      if (rest == to_lower(ext)) return true;
    }
  }
  return false;
}

std::vector<LicenseInstance> extract_declared(
    const std::string& root, const ScanConfig& config,
    std::vector<std::string>* warnings) {
  std::vector<LicenseInstance> out;
  fs::path rootp(root);
  for (const fs::path& p : sorted_regular_files(rootp, warnings)) {
    if (!matches_declared_name(p.filename().string(), config)) continue;
    auto content = read_file(p.string());
    if (!content) {
      if (warnings != nullptr) {
        warnings->push_back("unreadable file: " + relative_origin(rootp, p));
      }
      continue;
    }
    std::string normalized = normalize_license_text(*content);
    if (normalized.empty()) continue;
    LicenseInstance inst;
    inst.kind = LicenseKind::kDeclared;
    inst.origin = relative_origin(rootp, p);
    inst.text = std::move(normalized);
    bool at_root = p.parent_path() == rootp;
    inst.role = at_root ? LicenseRole::kProjectLicense
                        : LicenseRole::kComponentLicense;
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<LicenseInstance> extract_inline(const std::string& root,
                                            const std::string& file,
                                            const ScanConfig& config,
                                            std::vector<std::string>* warnings) {
  std::vector<LicenseInstance> out;
  fs::path p(file);
  if (!has_source_extension(p, config)) return out;
  auto content = read_file(file);
  fs::path rootp(root);
  std::string origin = relative_origin(rootp, p);
  if (!content) {
    if (warnings != nullptr) warnings->push_back("unreadable file: " + origin);
    return out;
  }
  if (content->find('\0') != std::string::npos) {
    if (warnings != nullptr) warnings->push_back("undecodable file: " + origin);
    return out;
  }
  std::string ext = to_lower(p.extension().string());
  std::string block = leading_comment_block(*content, ext);
  if (block.empty() || !contains_license_cue(block)) return out;
  std::string normalized = normalize_license_text(block);
  if (normalized.empty()) return out;
  LicenseInstance inst;
  inst.kind = LicenseKind::kInline;
  inst.origin = origin;
  inst.text = std::move(normalized);
  inst.role = LicenseRole::kComponentLicense;
  inst.scope = origin;
  out.push_back(std::move(inst));
  return out;
}

std::vector<PackageRef> collect_package_refs(const std::string& root,
                                             const ScanConfig& config,
                                             std::vector<std::string>* warnings) {
  std::vector<PackageRef> out;
  fs::path rootp(root);
  for (const fs::path& p : sorted_regular_files(rootp, warnings)) {
    std::string filename = p.filename().string();
    bool manifest = false;
    for (const std::string& glob : config.manifest_globs) {
      if (glob_match(glob, filename)) {
        manifest = true;
        break;
      }
    }
    std::string origin = relative_origin(rootp, p);
    if (manifest) {
      auto content = read_file(p.string());
      if (!content) {
        if (warnings != nullptr) warnings->push_back("unreadable file: " + origin);
        continue;
      }
      if (to_lower(p.extension().string()) == ".toml") {
        parse_dependency_table(*content, origin, &out, warnings);
      } else {
        parse_requirements_lines(*content, origin, &out, warnings);
      }
    } else if (config.scan_imports &&
               to_lower(p.extension().string()) == ".py") {
      auto content = read_file(p.string());
      if (content) scan_python_imports(*content, origin, &out);
    }
  }
  std::sort(out.begin(), out.end(), [](const PackageRef& a, const PackageRef& b) {
    return std::tie(a.source_file, a.name, a.version) <
           std::tie(b.source_file, b.name, b.version);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const PackageRef& a, const PackageRef& b) {
                          return a.name == b.name && a.version == b.version &&
                                 a.source_file == b.source_file;
                        }),
            out.end());
  return out;
}

ProjectScan scan_project(const std::string& root, const ScanConfig& config) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw RootNotFound("not a directory: " + root);
  }
  ProjectScan scan;
  scan.root = root;

  std::vector<LicenseInstance> instances =
      extract_declared(root, config, &scan.warnings);
  fs::path rootp(root);
  for (const fs::path& p : sorted_regular_files(rootp, &scan.warnings)) {
    auto inl = extract_inline(root, p.string(), config, &scan.warnings);
    instances.insert(instances.end(), inl.begin(), inl.end());
  }
  scan.package_refs = collect_package_refs(root, config, &scan.warnings);

  std::sort(instances.begin(), instances.end(),
            [](const LicenseInstance& a, const LicenseInstance& b) {
              if (a.origin != b.origin) return a.origin < b.origin;
              return static_cast<int>(a.kind) < static_cast<int>(b.kind);
            });

  // Byte-identical texts of the same kind collapse to the first origin.
  std::map<std::pair<int, std::string>, std::string> seen;
  for (LicenseInstance& inst : instances) {
    auto key = std::make_pair(static_cast<int>(inst.kind),
                              collapse_whitespace(inst.text));
    auto [it, inserted] = seen.emplace(key, inst.origin);
    if (!inserted) {
      scan.warnings.push_back("duplicate license text: " + inst.origin +
                              " matches " + it->second);
      continue;
    }
    scan.instances.push_back(std::move(inst));
  }

  int project_licenses = 0;
  for (const LicenseInstance& inst : scan.instances) {
    if (inst.role == LicenseRole::kProjectLicense) ++project_licenses;
  }
  if (project_licenses > 1) {
    scan.warnings.push_back(
        "multiple top-level license files; all treated as project licenses");
  }
  return scan;
}

}  // namespace lidetect::extract
