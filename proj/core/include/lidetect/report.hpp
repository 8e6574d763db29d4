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

#ifndef LIDETECT_REPORT_HPP_
#define LIDETECT_REPORT_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "lidetect/analyzer.hpp"

namespace lidetect::report {

inline constexpr const char* kSchemaVersion = "1";

// Machine-readable report. Key order is the stable (alphabetical) nlohmann
// object order; serialization round-trips bit-identically.
nlohmann::json scan_document(const ScanResult& scan, const std::string& root);
nlohmann::json analysis_document(const AnalysisResult& result);

std::string to_json_text(const nlohmann::json& doc);

// Human-oriented rendering; not a stable interface.
std::string to_text(const nlohmann::json& doc);

}  // namespace lidetect::report

#endif  // LIDETECT_REPORT_HPP_
