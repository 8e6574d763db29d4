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

#include "lidetect/compat.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace lidetect::compat {

namespace {

using extract::LicenseRole;

int idx(Attitude a) {
  switch (a) {
    case Attitude::kCan: return 0;
    case Attitude::kCannot: return 1;
    case Attitude::kMust: return 2;
    case Attitude::kUnknown: return -1;
  }
  return -1;
}

void require_concrete(Attitude a, const char* where) {
  if (idx(a) < 0) {
    throw UnknownAttitude(std::string("UNKNOWN attitude reaches ") + where);
  }
}

Attitude default_for(int term, const DefaultPolicy& policy) {
  return term_category(term) == TermCategory::kRight
             ? policy.absent_right
             : policy.absent_obligation;
}

}  // namespace

bool pair_ok_pl_cl(Attitude pl, Attitude cl) {
  require_concrete(pl, "pair_ok_pl_cl");
  require_concrete(cl, "pair_ok_pl_cl");
  //                   CL: CAN   CANNOT MUST
  static const bool kTable[3][3] = {
      /* PL CAN    */ {true, false, false},
      /* PL CANNOT */ {true, true, false},
      /* PL MUST   */ {true, false, true},
  };
  return kTable[idx(pl)][idx(cl)];
}

bool pair_ok_cl_cl(Attitude a, Attitude b) {
  require_concrete(a, "pair_ok_cl_cl");
  require_concrete(b, "pair_ok_cl_cl");
  static const bool kTable[3][3] = {
      /* CAN    */ {true, true, true},
      /* CANNOT */ {true, true, false},
      /* MUST   */ {true, false, true},
  };
  return kTable[idx(a)][idx(b)];
}

std::string to_string(PairRule r) {
  return r == PairRule::kPlVsCl ? "PLvsCL" : "CLvsCL";
}

std::string to_string(ConditionCase c) {
  switch (c) {
    case ConditionCase::kUnconditional: return "Unconditional";
    case ConditionCase::kConditionTrue: return "ConditionTrue";
    case ConditionCase::kConditionFalse: return "ConditionFalse";
    case ConditionCase::kBothCases: return "BothCases";
  }
  return "Unconditional";
}

ConcreteSummary default_fill(const gram::LicenseSummary& summary,
                             const DefaultPolicy& policy) {
  ConcreteSummary out;
  out.origin = summary.origin;
  out.role = summary.role;
  out.conditions = summary.conditions;
  for (int t = 0; t < kNumTerms; ++t) {
    Attitude a = summary.attitudes[static_cast<std::size_t>(t)];
    if (a == Attitude::kUnknown) {
      out.attitudes[static_cast<std::size_t>(t)] = default_for(t, policy);
      out.defaulted[static_cast<std::size_t>(t)] = true;
    } else {
      out.attitudes[static_cast<std::size_t>(t)] = a;
      out.defaulted[static_cast<std::size_t>(t)] = false;
    }
  }
  return out;
}

std::vector<ConflictRecord> check_incomp(const ConcreteSummary& l1,
                                         const ConcreteSummary& l2) {
  bool l1_pl = l1.role == LicenseRole::kProjectLicense;
  bool l2_pl = l2.role == LicenseRole::kProjectLicense;
  // Exactly one PL selects the one-way rule with the PL on the left;
  // PL/PL pairs fall back to the mutual rule.
  bool one_way = l1_pl != l2_pl;
  const ConcreteSummary& left = (one_way && l2_pl) ? l2 : l1;
  const ConcreteSummary& right = (one_way && l2_pl) ? l1 : l2;

  std::vector<ConflictRecord> conflicts;
  for (int t = 0; t < kNumTerms; ++t) {
    Attitude a = left.attitudes[static_cast<std::size_t>(t)];
    Attitude b = right.attitudes[static_cast<std::size_t>(t)];
    bool ok = one_way ? pair_ok_pl_cl(a, b) : pair_ok_cl_cl(a, b);
    if (ok) continue;
    ConflictRecord c;
    c.term = t;
    c.left_origin = left.origin;
    c.left = a;
    c.left_defaulted = left.defaulted[static_cast<std::size_t>(t)];
    c.right_origin = right.origin;
    c.right = b;
    c.right_defaulted = right.defaulted[static_cast<std::size_t>(t)];
    c.rule = one_way ? PairRule::kPlVsCl : PairRule::kClVsCl;
    conflicts.push_back(std::move(c));
  }
  return conflicts;
}

std::vector<ResultPair> condi_check(const ConcreteSummary& l1,
                                    const ConcreteSummary& l2,
                                    const DefaultPolicy& policy) {
  if (l1.conditions.empty() && l2.conditions.empty()) {
    throw NoConditions("condi_check requires at least one condition");
  }
  std::vector<ResultPair> out;
  for (int holder = 0; holder < 2; ++holder) {
    const ConcreteSummary& carrier = holder == 0 ? l1 : l2;
    for (const gram::TermCondition& cond : carrier.conditions) {
      ResultPair pair;
      pair.condition = cond;
      pair.holder = holder;

      // Condition satisfied: the antecedent becomes an obligation, the
      // consequent keeps its inferred attitude.
      ConcreteSummary t1 = l1;
      ConcreteSummary t2 = l2;
      ConcreteSummary& t_carrier = holder == 0 ? t1 : t2;
      t_carrier.attitudes[static_cast<std::size_t>(cond.antecedent_term)] =
          Attitude::kMust;
      t_carrier.defaulted[static_cast<std::size_t>(cond.antecedent_term)] = false;
      pair.conflicts_true = check_incomp(t1, t2);
      pair.r_true = !pair.conflicts_true.empty();

      // Condition unsatisfied: the consequent is not granted, the antecedent
      // reverts to its default.
      ConcreteSummary f1 = l1;
      ConcreteSummary f2 = l2;
      ConcreteSummary& f_carrier = holder == 0 ? f1 : f2;
      f_carrier.attitudes[static_cast<std::size_t>(cond.consequent_term)] =
          Attitude::kCannot;
      f_carrier.defaulted[static_cast<std::size_t>(cond.consequent_term)] = false;
      f_carrier.attitudes[static_cast<std::size_t>(cond.antecedent_term)] =
          default_for(cond.antecedent_term, policy);
      f_carrier.defaulted[static_cast<std::size_t>(cond.antecedent_term)] = true;
      pair.conflicts_false = check_incomp(f1, f2);
      pair.r_false = !pair.conflicts_false.empty();

      out.push_back(std::move(pair));
    }
  }
  return out;
}

Verdict detect(const ConcreteSummary& l1, const ConcreteSummary& l2,
               const DefaultPolicy& policy) {
  Verdict verdict;
  std::vector<ConflictRecord> base = check_incomp(l1, l2);
  bool has_conditions = !l1.conditions.empty() || !l2.conditions.empty();

  if (!has_conditions) {
    verdict.incompatible = !base.empty();
    for (ConflictRecord& c : base) {
      c.condition_case = ConditionCase::kUnconditional;
      verdict.conflicts.push_back(std::move(c));
    }
    return verdict;
  }

  verdict.result_pairs = condi_check(l1, l2, policy);
  std::set<int> touched;
  for (const ConcreteSummary* s : {&l1, &l2}) {
    for (const gram::TermCondition& c : s->conditions) {
      touched.insert(c.antecedent_term);
      touched.insert(c.consequent_term);
    }
  }

  bool one_pl = (l1.role == LicenseRole::kProjectLicense) !=
                (l2.role == LicenseRole::kProjectLicense);
  std::vector<const ResultPair*> contributing;
  for (const ResultPair& pair : verdict.result_pairs) {
    // Rule 1 for CL/CL (incompatible under both assumptions); Rule 2 when a
    // PL is involved (one incompatible assumption suffices). A PL/PL pair
    // follows the mutual rule, like the matrix choice.
    bool incompatible = one_pl ? (pair.r_true || pair.r_false)
                               : (pair.r_true && pair.r_false);
    if (incompatible) {
      contributing.push_back(&pair);
      verdict.incompatible = true;
    }
  }
  // Terms no condition touches keep their direct verdict.
  std::vector<ConflictRecord> unconditional;
  for (ConflictRecord& c : base) {
    if (touched.count(c.term) > 0) continue;
    c.condition_case = ConditionCase::kUnconditional;
    unconditional.push_back(c);
    verdict.incompatible = true;
  }

  if (!verdict.incompatible) return verdict;

  auto key = [](const ConflictRecord& c) {
    return std::tuple<int, int, int, int>(
        c.term, static_cast<int>(c.left), static_cast<int>(c.right),
        c.condition_case ? static_cast<int>(*c.condition_case) : -1);
  };
  std::set<std::tuple<int, int, int, int>> seen;
  auto add = [&](ConflictRecord c) {
    if (seen.insert(key(c)).second) verdict.conflicts.push_back(std::move(c));
  };
  for (ConflictRecord& c : unconditional) add(std::move(c));
  for (const ResultPair* pair : contributing) {
    // A term conflicting identically under both assumptions merges.
    for (const ConflictRecord& ct : pair->conflicts_true) {
      if (touched.count(ct.term) == 0) continue;  // counted as unconditional
      bool in_false = false;
      for (const ConflictRecord& cf : pair->conflicts_false) {
        if (cf.term == ct.term && cf.left == ct.left && cf.right == ct.right) {
          in_false = true;
          break;
        }
      }
      ConflictRecord c = ct;
      c.condition_case = in_false ? ConditionCase::kBothCases
                                  : ConditionCase::kConditionTrue;
      add(std::move(c));
    }
    for (const ConflictRecord& cf : pair->conflicts_false) {
      if (touched.count(cf.term) == 0) continue;
      bool in_true = false;
      for (const ConflictRecord& ct : pair->conflicts_true) {
        if (ct.term == cf.term && ct.left == cf.left && ct.right == cf.right) {
          in_true = true;
          break;
        }
      }
      if (in_true) continue;  // already merged as BothCases
      ConflictRecord c = cf;
      c.condition_case = ConditionCase::kConditionFalse;
      add(std::move(c));
    }
  }
  std::sort(verdict.conflicts.begin(), verdict.conflicts.end(),
            [](const ConflictRecord& a, const ConflictRecord& b) {
              if (a.term != b.term) return a.term < b.term;
              int ca = a.condition_case ? static_cast<int>(*a.condition_case) : -1;
              int cb = b.condition_case ? static_cast<int>(*b.condition_case) : -1;
              return ca < cb;
            });
  return verdict;
}

ProjectReport analyze_project(const std::string& project_root,
                              const std::vector<gram::LicenseSummary>& summaries,
                              const DefaultPolicy& policy) {
  ProjectReport report;
  report.project = project_root;
  report.summaries = summaries;

  std::vector<ConcreteSummary> concrete;
  concrete.reserve(summaries.size());
  for (const gram::LicenseSummary& s : summaries) {
    concrete.push_back(default_fill(s, policy));
  }
  std::vector<std::size_t> pls, cls;
  for (std::size_t i = 0; i < concrete.size(); ++i) {
    (concrete[i].role == LicenseRole::kProjectLicense ? pls : cls).push_back(i);
  }
  if (pls.size() > 1) {
    report.warnings.push_back(
        "multiple project licenses; PL pairs compared with the CL rule");
  }

  auto run_pair = [&](std::size_t a, std::size_t b) {
    Verdict v = detect(concrete[a], concrete[b], policy);
    ++report.pairs_checked;
    if (v.incompatible) {
      report.incompatible = true;
      report.conflicts.insert(report.conflicts.end(), v.conflicts.begin(),
                              v.conflicts.end());
    }
  };
  for (std::size_t p : pls) {
    for (std::size_t c : cls) run_pair(p, c);
  }
  for (std::size_t i = 0; i < cls.size(); ++i) {
    for (std::size_t j = i + 1; j < cls.size(); ++j) run_pair(cls[i], cls[j]);
  }
  for (std::size_t i = 0; i < pls.size(); ++i) {
    for (std::size_t j = i + 1; j < pls.size(); ++j) run_pair(pls[i], pls[j]);
  }

  std::sort(report.conflicts.begin(), report.conflicts.end(),
            [](const ConflictRecord& a, const ConflictRecord& b) {
              return std::tie(a.left_origin, a.right_origin, a.term) <
                     std::tie(b.left_origin, b.right_origin, b.term);
            });
  return report;
}

}  // namespace lidetect::compat
