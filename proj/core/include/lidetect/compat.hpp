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

#ifndef LIDETECT_COMPAT_HPP_
#define LIDETECT_COMPAT_HPP_

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lidetect/attitude.hpp"

namespace lidetect::compat {

using gram::Attitude;

// Attitudes assumed for terms a license never mentions: unmentioned rights
// are not granted (CANNOT), unmentioned obligations are not imposed (CAN).
struct DefaultPolicy {
  Attitude absent_right = Attitude::kCannot;
  Attitude absent_obligation = Attitude::kCan;
};

struct UnknownAttitude : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One-way compatibility of a project license with a component license:
// the PL must be the same or more restrictive.
bool pair_ok_pl_cl(Attitude pl, Attitude cl);

// Two component licenses conflict only on CANNOT vs MUST; symmetric.
bool pair_ok_cl_cl(Attitude a, Attitude b);

enum class PairRule { kPlVsCl, kClVsCl };
enum class ConditionCase {
  kUnconditional,
  kConditionTrue,
  kConditionFalse,
  kBothCases,
};

std::string to_string(PairRule r);
std::string to_string(ConditionCase c);

struct ConflictRecord {
  int term = 0;
  std::string left_origin;
  Attitude left = Attitude::kUnknown;
  bool left_defaulted = false;
  std::string right_origin;
  Attitude right = Attitude::kUnknown;
  bool right_defaulted = false;
  PairRule rule = PairRule::kClVsCl;
  std::optional<ConditionCase> condition_case;
};

// A summary after default_fill: every term concrete, defaulted terms marked.
struct ConcreteSummary {
  std::string origin;
  extract::LicenseRole role = extract::LicenseRole::kComponentLicense;
  std::array<Attitude, kNumTerms> attitudes;
  std::array<bool, kNumTerms> defaulted;
  std::vector<gram::TermCondition> conditions;

  ConcreteSummary() {
    attitudes.fill(Attitude::kUnknown);
    defaulted.fill(false);
  }
};

// Replaces UNKNOWN entries by the policy defaults; never introduces UNKNOWN,
// never touches inferred attitudes. Idempotent.
ConcreteSummary default_fill(const gram::LicenseSummary& summary,
                             const DefaultPolicy& policy);

// One record per term whose attitude pair fails the applicable matrix
// (Table rule chosen by roles; the PL side goes left). Empty = compatible.
std::vector<ConflictRecord> check_incomp(const ConcreteSummary& l1,
                                         const ConcreteSummary& l2);

struct ResultPair {
  bool r_true = false;
  bool r_false = false;
  gram::TermCondition condition;
  int holder = 0;  // 0: condition declared by l1, 1: by l2
  std::vector<ConflictRecord> conflicts_true;
  std::vector<ConflictRecord> conflicts_false;
};

struct NoConditions : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// For each condition, assume it holds (antecedent forced to MUST) and that
// it does not (consequent forced to CANNOT, antecedent back to default),
// re-checking incompatibility in both worlds. Pairs keep condition order.
std::vector<ResultPair> condi_check(const ConcreteSummary& l1,
                                    const ConcreteSummary& l2,
                                    const DefaultPolicy& policy);

struct Verdict {
  bool incompatible = false;
  std::vector<ConflictRecord> conflicts;
  std::vector<ResultPair> result_pairs;
};

// Without conditions: incompatible iff check_incomp finds a conflict. With
// conditions: two CLs are incompatible only when some condition conflicts
// under both assumptions; with a PL involved one conflicting assumption
// suffices. Terms untouched by any condition always count directly.
Verdict detect(const ConcreteSummary& l1, const ConcreteSummary& l2,
               const DefaultPolicy& policy);

struct ProjectReport {
  std::string project;
  int pairs_checked = 0;
  std::vector<ConflictRecord> conflicts;
  bool incompatible = false;
  std::vector<gram::LicenseSummary> summaries;
  std::vector<std::string> warnings;
};

// With a PL: every PL/CL pair plus all CL pairs; without: CL pairs only.
// Multiple PLs are compared with the CL matrix and flagged. Deterministic
// output ordering (origin, then term).
ProjectReport analyze_project(const std::string& project_root,
                              const std::vector<gram::LicenseSummary>& summaries,
                              const DefaultPolicy& policy);

}  // namespace lidetect::compat

#endif  // LIDETECT_COMPAT_HPP_
