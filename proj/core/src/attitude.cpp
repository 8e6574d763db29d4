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

#include "lidetect/attitude.hpp"

#include <algorithm>
#include <set>

namespace lidetect::gram {

std::string to_string(Attitude a) {
  switch (a) {
    case Attitude::kCan: return "CAN";
    case Attitude::kCannot: return "CANNOT";
    case Attitude::kMust: return "MUST";
    case Attitude::kUnknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::optional<Attitude> attitude_from_string(std::string_view name) {
  if (name == "CAN") return Attitude::kCan;
  if (name == "CANNOT") return Attitude::kCannot;
  if (name == "MUST") return Attitude::kMust;
  if (name == "UNKNOWN") return Attitude::kUnknown;
  return std::nullopt;
}

int restrictiveness(Attitude a) {
  switch (a) {
    case Attitude::kCannot: return 2;
    case Attitude::kMust: return 1;
    case Attitude::kCan: return 0;
    case Attitude::kUnknown: return -1;
  }
  return -1;
}

namespace {

struct NodeSpan {
  int begin = 0;
  int end = 0;  // exclusive
};

NodeSpan node_span(const ParseNode& node) {
  if (node.token_index.has_value()) {
    return {*node.token_index, *node.token_index + 1};
  }
  NodeSpan span{0, 0};
  bool first = true;
  for (const ParseNode& child : node.children) {
    NodeSpan c = node_span(child);
    if (c.begin == c.end) continue;
    if (first) {
      span = c;
      first = false;
    } else {
      span.begin = std::min(span.begin, c.begin);
      span.end = std::max(span.end, c.end);
    }
  }
  return span;
}

bool covers(const ParseNode& node, int begin, int end) {
  NodeSpan s = node_span(node);
  return s.begin <= begin && s.end >= end;
}

void collect_sbars(const ParseNode& node, std::vector<const ParseNode*>* out) {
  if (node.tag == Tag::kSBAR) out->push_back(&node);
  for (const ParseNode& child : node.children) collect_sbars(child, out);
}

}  // namespace

std::vector<PowerfulToken> collect_pts(const ParseNode& tree,
                                       const ner::TermEntity& entity,
                                       const std::vector<Tag>& tags) {
  const int n = static_cast<int>(tags.size());
  if (entity.begin < 0 || entity.end > n || entity.begin >= entity.end) {
    throw SpanOutOfRange("entity span [" + std::to_string(entity.begin) + "," +
                         std::to_string(entity.end) + ") out of range");
  }
  auto in_span = [&](int i) { return i >= entity.begin && i < entity.end; };

  std::set<int> internal;
  for (int i = entity.begin; i < entity.end; ++i) {
    if (is_pt_eligible(tags[static_cast<std::size_t>(i)])) internal.insert(i);
  }

  // The container is the deepest node covering the whole span; its ancestor
  // chain (container included) carries the governing chunks.
  auto chains = ancestor_chains(tree, n);
  const auto& chain = chains[static_cast<std::size_t>(entity.begin)];
  std::vector<const ParseNode*> ancestors;  // ROOT .. container
  for (const ParseNode* node : chain) {
    ancestors.push_back(node);
  }
  while (!ancestors.empty() &&
         !covers(*ancestors.back(), entity.begin, entity.end)) {
    ancestors.pop_back();
  }

  std::set<int> external;
  const ParseNode* nearest_clause = nullptr;
  for (const ParseNode* node : ancestors) {
    if (node->tag == Tag::kS || node->tag == Tag::kSBAR) nearest_clause = node;
    if (node->tag == Tag::kVP || node->tag == Tag::kSBAR) {
      for (int i : direct_token_children(*node)) {
        if (!in_span(i)) external.insert(i);
      }
    }
    // Clause-level negation adverbs ("in no event shall ...").
    if (node->tag == Tag::kS || node->tag == Tag::kSBAR) {
      for (int i : direct_token_children(*node)) {
        if (!in_span(i) && tags[static_cast<std::size_t>(i)] == Tag::kRB) {
          external.insert(i);
        }
      }
    }
  }
  // Predicate VPs of the clause the entity lives in dominate its attitude
  // even when they are siblings of the entity chunk.
  if (nearest_clause != nullptr) {
    for (const ParseNode& child : nearest_clause->children) {
      if (child.tag != Tag::kVP) continue;
      for (int i : vp_chain_tokens(child)) {
        if (!in_span(i)) external.insert(i);
      }
    }
  }

  std::vector<PowerfulToken> out;
  std::set<int> seen;
  for (int i = 0; i < n; ++i) {
    bool internal_hit = internal.count(i) > 0;
    bool external_hit =
        external.count(i) > 0 && is_pt_eligible(tags[static_cast<std::size_t>(i)]);
    if (!internal_hit && !external_hit) continue;
    if (!seen.insert(i).second) continue;
    PowerfulToken pt;
    pt.token_index = i;
    pt.pos = tags[static_cast<std::size_t>(i)];
    pt.locality = internal_hit ? PowerfulToken::Locality::kInternal
                               : PowerfulToken::Locality::kExternal;
    out.push_back(pt);
  }
  return out;
}

Attitude infer_attitude(const std::vector<PowerfulToken>& pts,
                        const std::vector<text::Token>& tokens,
                        const AttitudeLexicon& lexicon) {
  std::set<int> pt_indices;
  for (const PowerfulToken& pt : pts) pt_indices.insert(pt.token_index);

  int cannot_marks = 0;
  bool must_mark = false;
  std::vector<bool> consumed(tokens.size(), false);

  // Multiword lexicon entries first: a phrase occurrence that overlaps at
  // least one PT yields one mark and consumes its tokens.
  for (const AttitudeLexicon::Phrase& phrase : lexicon.phrases()) {
    const std::size_t k = phrase.stems.size();
    if (tokens.size() < k) continue;
    for (std::size_t i = 0; i + k <= tokens.size(); ++i) {
      bool match = true;
      for (std::size_t j = 0; j < k; ++j) {
        if (consumed[i + j] || tokens[i + j].stem != phrase.stems[j]) {
          match = false;
          break;
        }
      }
      if (!match) continue;
      bool overlaps_pt = false;
      for (std::size_t j = 0; j < k; ++j) {
        if (pt_indices.count(static_cast<int>(i + j)) > 0) overlaps_pt = true;
      }
      if (!overlaps_pt) continue;
      for (std::size_t j = 0; j < k; ++j) consumed[i + j] = true;
      if (phrase.is_must) {
        must_mark = true;
      } else {
        ++cannot_marks;
      }
    }
  }
  for (const PowerfulToken& pt : pts) {
    std::size_t i = static_cast<std::size_t>(pt.token_index);
    if (consumed[i]) continue;
    const std::string& stem = tokens[i].stem;
    if (lexicon.cannot_stem(stem)) {
      ++cannot_marks;
    } else if (lexicon.must_stem(stem)) {
      must_mark = true;
    }
    // otherwise the PT marks CAN, which carries no weight of its own
  }
  if (cannot_marks % 2 == 1) return Attitude::kCannot;
  return must_mark ? Attitude::kMust : Attitude::kCan;
}

std::vector<Condition> detect_conditions(
    const ParseNode& tree, const std::vector<ner::TermEntity>& entities,
    const text::Sentence& sentence) {
  std::vector<const ParseNode*> sbars;
  collect_sbars(tree, &sbars);

  // Entities inside any SBAR never serve as main-clause consequents.
  auto inside = [](const NodeSpan& span, const ner::TermEntity& e) {
    return e.begin >= span.begin && e.end <= span.end;
  };
  std::vector<NodeSpan> all_spans;
  for (const ParseNode* sbar : sbars) all_spans.push_back(node_span(*sbar));

  std::vector<Condition> out;
  for (std::size_t s = 0; s < sbars.size(); ++s) {
    if (!is_conditional_sbar(*sbars[s], sentence)) continue;
    const NodeSpan span = all_spans[s];
    for (const ner::TermEntity& ante : entities) {
      if (!inside(span, ante)) continue;
      for (const ner::TermEntity& cons : entities) {
        bool in_some_sbar = false;
        for (const NodeSpan& other : all_spans) {
          if (inside(other, cons)) {
            in_some_sbar = true;
            break;
          }
        }
        if (in_some_sbar) continue;
        out.push_back(Condition{ante, cons});
      }
    }
  }
  return out;
}

namespace {

void merge_evidence(LicenseSummary* summary, int term, EvidenceRecord record) {
  Attitude merged = summary->attitudes[static_cast<std::size_t>(term)];
  if (restrictiveness(record.attitude) > restrictiveness(merged)) {
    summary->attitudes[static_cast<std::size_t>(term)] = record.attitude;
  }
  summary->evidence[static_cast<std::size_t>(term)].push_back(std::move(record));
}

}  // namespace

void summarize_text_into(const std::string& text,
                         const ner::SequenceModel& model,
                         const AttitudeLexicon& lexicon,
                         LicenseSummary* summary) {
  std::vector<text::Sentence> sentences =
      text::split_sentences(text, &summary->warnings);
  for (const text::Sentence& sentence : sentences) {
    std::vector<int> labels = ner::tag(model, sentence);
    std::vector<ner::TermEntity> entities =
        ner::decode_entities(labels, sentence, &summary->warnings);
    if (entities.empty()) continue;
    std::vector<Tag> tags = pos_tag(sentence);
    ParseNode tree = parse_sentence(sentence, tags);
    for (const ner::TermEntity& entity : entities) {
      std::vector<PowerfulToken> pts = collect_pts(tree, entity, tags);
      EvidenceRecord record;
      record.sentence_index = sentence.index;
      record.begin = entity.begin;
      record.end = entity.end;
      for (int i = entity.begin; i < entity.end; ++i) {
        if (i > entity.begin) record.entity_text += ' ';
        record.entity_text += sentence.tokens[static_cast<std::size_t>(i)].surface;
      }
      for (const PowerfulToken& pt : pts) {
        const std::string& surface =
            sentence.tokens[static_cast<std::size_t>(pt.token_index)].surface;
        if (pt.locality == PowerfulToken::Locality::kInternal) {
          record.internal_pts.push_back(surface);
        } else {
          record.external_pts.push_back(surface);
        }
      }
      record.attitude = infer_attitude(pts, sentence.tokens, lexicon);
      merge_evidence(summary, entity.term, std::move(record));
    }
    for (const Condition& c : detect_conditions(tree, entities, sentence)) {
      summary->conditions.push_back(
          TermCondition{c.antecedent.term, c.consequent.term, sentence.index});
    }
  }
}

LicenseSummary summarize(const extract::LicenseInstance& instance,
                         const ner::SequenceModel& model,
                         const AttitudeLexicon& lexicon) {
  LicenseSummary summary;
  summary.origin = instance.origin;
  summary.kind = instance.kind;
  summary.role = instance.role;
  summarize_text_into(instance.text, model, lexicon, &summary);
  return summary;
}

}  // namespace lidetect::gram
