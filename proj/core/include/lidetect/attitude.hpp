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

#ifndef LIDETECT_ATTITUDE_HPP_
#define LIDETECT_ATTITUDE_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lidetect/bio.hpp"
#include "lidetect/extract.hpp"
#include "lidetect/lexicon.hpp"
#include "lidetect/model.hpp"
#include "lidetect/parse.hpp"

namespace lidetect::gram {

enum class Attitude { kCan, kCannot, kMust, kUnknown };

std::string to_string(Attitude a);
std::optional<Attitude> attitude_from_string(std::string_view name);

// CANNOT > MUST > CAN; UNKNOWN has no rank.
int restrictiveness(Attitude a);

struct PowerfulToken {
  enum class Locality { kInternal, kExternal };
  int token_index = 0;
  Tag pos = Tag::kNN;
  Locality locality = Locality::kInternal;
};

struct SpanOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Internal PTs are the attitude-bearing tokens inside the entity span.
// External PTs are attitude-bearing tokens outside the span that govern it:
// tokens of VP/SBAR chunks on the entity's root path, the verb chains of
// predicate VPs of the enclosing clause, and clause-level negation adverbs.
// Pronouns and other non-PT parts of speech are never included.
std::vector<PowerfulToken> collect_pts(const ParseNode& tree,
                                       const ner::TermEntity& entity,
                                       const std::vector<Tag>& tags);

// Marks each PT CANNOT/MUST per the lexicon (multiword entries match on
// consecutive stems and consume their tokens), CAN otherwise. An odd number
// of CANNOT marks negates the reading -> CANNOT; an even count is offset,
// leaving MUST if present, else CAN.
Attitude infer_attitude(const std::vector<PowerfulToken>& pts,
                        const std::vector<text::Token>& tokens,
                        const AttitudeLexicon& lexicon);

// A term in a conditional clause constrains a term of the main clause.
struct Condition {
  ner::TermEntity antecedent;
  ner::TermEntity consequent;
};

std::vector<Condition> detect_conditions(
    const ParseNode& tree, const std::vector<ner::TermEntity>& entities,
    const text::Sentence& sentence);

struct EvidenceRecord {
  int sentence_index = 0;
  int begin = 0;
  int end = 0;
  std::string entity_text;
  std::vector<std::string> internal_pts;
  std::vector<std::string> external_pts;
  Attitude attitude = Attitude::kUnknown;
  bool defaulted = false;
};

struct TermCondition {
  int antecedent_term = 0;
  int consequent_term = 0;
  int sentence_index = 0;
};

// The rights/obligations vector T(l) = [t_0 .. t_22] of one license, with
// condition links and per-term evidence. Terms never observed stay UNKNOWN.
struct LicenseSummary {
  std::string origin;
  extract::LicenseKind kind = extract::LicenseKind::kDeclared;
  extract::LicenseRole role = extract::LicenseRole::kComponentLicense;
  std::optional<std::string> spdx_id;
  std::array<Attitude, kNumTerms> attitudes;
  std::vector<TermCondition> conditions;
  std::array<std::vector<EvidenceRecord>, kNumTerms> evidence;
  std::vector<std::string> warnings;

  LicenseSummary() { attitudes.fill(Attitude::kUnknown); }
};

// Runs the per-sentence pipeline (tag -> entities -> pos -> parse -> PTs ->
// attitude -> conditions) over the instance text and merges per term with
// restrictive-wins priority (CANNOT > MUST > CAN). Order-independent.
LicenseSummary summarize(const extract::LicenseInstance& instance,
                         const ner::SequenceModel& model,
                         const AttitudeLexicon& lexicon);

// Same pipeline over bare text; summarize() and the official-license path
// share it.
void summarize_text_into(const std::string& text,
                         const ner::SequenceModel& model,
                         const AttitudeLexicon& lexicon,
                         LicenseSummary* summary);

}  // namespace lidetect::gram

#endif  // LIDETECT_ATTITUDE_HPP_
