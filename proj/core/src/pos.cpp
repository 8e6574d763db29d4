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

#include "lidetect/pos.hpp"

#include <cctype>
#include <map>
#include <set>

#include "lidetect/util.hpp"

namespace lidetect::gram {

namespace {

const std::map<std::string, Tag>& closed_classes() {
  static const std::map<std::string, Tag> table = [] {
    std::map<std::string, Tag> t;
    auto add = [&](Tag tag, std::initializer_list<const char*> words) {
      for (const char* w : words) t[w] = tag;
    };
    add(Tag::kMD, {"can", "could", "may", "might", "must", "shall", "should",
                   "will", "would", "ought"});
    add(Tag::kPRP, {"i", "you", "he", "she", "it", "we", "they", "me", "him",
                    "her", "us", "them", "itself", "yourself", "themselves"});
    add(Tag::kDT, {"the", "a", "an", "this", "these", "those", "any", "some",
                   "each", "every", "either", "both", "another", "my", "your",
                   "its", "their", "our", "his"});
    add(Tag::kPDT, {"all", "such", "half"});
    add(Tag::kWDT, {"which", "that", "whatever", "whichever", "who", "whom",
                    "whose"});
    add(Tag::kIN,
        {"if", "unless", "when", "until", "while", "because", "since",
         "although", "though", "whether", "in", "of", "on", "at", "by", "for",
         "with", "without", "from", "under", "upon", "within", "into", "onto",
         "via", "per", "as", "to", "about", "against", "between", "through",
         "during", "before", "after", "above", "below", "toward", "towards",
         "notwithstanding", "except", "regarding", "concerning"});
    add(Tag::kRB, {"not", "never", "also", "only", "always", "freely",
                   "merely", "solely", "expressly", "hereby", "herein",
                   "otherwise", "however", "thus", "furthermore", "no", "nor",
                   "neither", "nothing", "n't", "so", "prominently", "clearly",
                   "publicly", "privately", "statically", "dynamically"});
    // Auxiliaries and common license verbs whose base form defaults to NN.
    add(Tag::kVB, {"be", "do", "distribute", "redistribute", "modify",
                   "sublicense", "relicense", "reproduce", "retain",
                   "preserve", "refuse", "disallow", "decline", "prohibit",
                   "delete", "remove", "grant", "permit", "allow", "comply",
                   "indemnify", "notify", "email", "rename", "compensate",
                   "disclose", "ensure", "ask", "agree", "incorporate",
                   "acknowledge", "endorse", "promote", "sell", "resell",
                   "void", "waive", "provide", "include", "give", "make",
                   "pay", "obtain", "offer", "publish", "merge", "carry",
                   "convey", "apply", "deal", "assert", "misrepresent",
                   "declare", "accept", "keep"});
    add(Tag::kVBP, {"are", "have", "am"});
    add(Tag::kVBZ, {"is", "has", "does", "permits", "requires", "grants",
                    "states", "includes", "applies", "governs", "means",
                    "covers", "reserves", "prohibits", "survives", "remains",
                    "constitutes", "allows"});
    add(Tag::kVBD, {"was", "were", "had", "did"});
    add(Tag::kVBN, {"been", "given", "written", "held", "made", "known",
                    "foreseen", "taken"});
    add(Tag::kVBG, {"being"});
    add(Tag::kJJ, {"free", "liable", "responsible", "available", "subject",
                   "perpetual", "worldwide", "irrevocable", "prior",
                   "entire", "above", "final", "third", "new", "other",
                   "further", "same", "own", "full", "applicable"});
    add(Tag::kNN, {"anything", "something", "everything", "and", "or", "but",
                   "thing", "string"});
    return t;
  }();
  return table;
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool is_punct_token(const std::string& surface) {
  for (char c : surface) {
    if (std::isalnum(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool is_digits(const std::string& surface) {
  if (surface.empty()) return false;
  for (char c : surface) {
    if (!is_ascii_digit(c)) return false;
  }
  return true;
}

bool adjective_suffix(const std::string& w) {
  return ends_with(w, "ous") || ends_with(w, "ful") || ends_with(w, "less") ||
         ends_with(w, "able") || ends_with(w, "ible") || ends_with(w, "ive") ||
         ends_with(w, "ant") || ends_with(w, "ical") || ends_with(w, "ary") ||
         (ends_with(w, "al") && w.size() > 4);
}

// Nearest earlier non-adverb, non-punctuation tag; kRoot when none.
Tag prev_content_tag(const std::vector<Tag>& tags, int i) {
  for (int j = i - 1; j >= 0; --j) {
    Tag t = tags[static_cast<std::size_t>(j)];
    if (t == Tag::kRB || t == Tag::kRBR || t == Tag::kRBS || t == Tag::kPunct) {
      continue;
    }
    return t;
  }
  return Tag::kRoot;
}

}  // namespace

std::string to_string(Tag tag) {
  switch (tag) {
    case Tag::kRoot: return "ROOT";
    case Tag::kS: return "S";
    case Tag::kNP: return "NP";
    case Tag::kVP: return "VP";
    case Tag::kSBAR: return "SBAR";
    case Tag::kWHNP: return "WHNP";
    case Tag::kVB: return "VB";
    case Tag::kVBD: return "VBD";
    case Tag::kVBG: return "VBG";
    case Tag::kVBN: return "VBN";
    case Tag::kVBP: return "VBP";
    case Tag::kVBZ: return "VBZ";
    case Tag::kMD: return "MD";
    case Tag::kIN: return "IN";
    case Tag::kRB: return "RB";
    case Tag::kRBR: return "RBR";
    case Tag::kRBS: return "RBS";
    case Tag::kPRP: return "PRP";
    case Tag::kPDT: return "PDT";
    case Tag::kDT: return "DT";
    case Tag::kNN: return "NN";
    case Tag::kNNS: return "NNS";
    case Tag::kJJ: return "JJ";
    case Tag::kWDT: return "WDT";
    case Tag::kPunct: return "PUNCT";
  }
  return "NN";
}

std::optional<Tag> tag_from_string(std::string_view name) {
  static const std::map<std::string, Tag, std::less<>> table = [] {
    std::map<std::string, Tag, std::less<>> t;
    for (int i = static_cast<int>(Tag::kRoot);
         i <= static_cast<int>(Tag::kPunct); ++i) {
      t[to_string(static_cast<Tag>(i))] = static_cast<Tag>(i);
    }
    return t;
  }();
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

bool is_token_tag(Tag tag) {
  return static_cast<int>(tag) >= static_cast<int>(Tag::kVB);
}

bool is_verb(Tag tag) {
  switch (tag) {
    case Tag::kVB:
    case Tag::kVBD:
    case Tag::kVBG:
    case Tag::kVBN:
    case Tag::kVBP:
    case Tag::kVBZ:
      return true;
    default:
      return false;
  }
}

bool is_pt_eligible(Tag tag) {
  if (is_verb(tag)) return true;
  switch (tag) {
    case Tag::kMD:
    case Tag::kIN:
    case Tag::kRB:
    case Tag::kRBR:
    case Tag::kRBS:
      return true;
    default:
      return false;
  }
}

std::vector<Tag> pos_tag(const text::Sentence& sentence) {
  const auto& tokens = sentence.tokens;
  std::vector<Tag> tags(tokens.size(), Tag::kNN);
  const auto& classes = closed_classes();

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& surface = tokens[i].surface;
    std::string lower = to_lower(surface);

    if (is_punct_token(surface)) {
      tags[i] = Tag::kPunct;
      continue;
    }
    if (is_digits(surface)) {
      tags[i] = Tag::kNN;
      continue;
    }
    if (auto it = classes.find(lower); it != classes.end()) {
      tags[i] = it->second;
      continue;
    }
    // Comparative/superlative adverbs.
    if (lower == "more" || lower == "less") {
      tags[i] = Tag::kRBR;
      continue;
    }
    if (lower == "most" || lower == "least") {
      tags[i] = Tag::kRBS;
      continue;
    }
    if (ends_with(lower, "ing") && lower.size() > 4) {
      tags[i] = Tag::kVBG;
      continue;
    }
    if (ends_with(lower, "ed") && lower.size() > 3) {
      // Participle after an auxiliary/modal chain or at the sentence start,
      // simple past after a subject.
      Tag prev = prev_content_tag(tags, static_cast<int>(i));
      bool participle = prev == Tag::kRoot || prev == Tag::kMD ||
                        is_verb(prev) || prev == Tag::kIN;
      tags[i] = participle ? Tag::kVBN : Tag::kVBD;
      continue;
    }
    if (ends_with(lower, "ly") && lower.size() > 3) {
      tags[i] = Tag::kRB;
      continue;
    }
    if (ends_with(lower, "s") && lower.size() > 2 && !ends_with(lower, "ss") &&
        !ends_with(lower, "us") && !ends_with(lower, "is")) {
      // Third-person verb directly after a pronoun, plural noun otherwise.
      Tag prev = prev_content_tag(tags, static_cast<int>(i));
      tags[i] = prev == Tag::kPRP ? Tag::kVBZ : Tag::kNNS;
      continue;
    }
    if (adjective_suffix(lower)) {
      tags[i] = Tag::kJJ;
      continue;
    }
    // Context promotions for default nouns: verbs after modals, "to" and
    // subjects ("you state changes").
    Tag prev = prev_content_tag(tags, static_cast<int>(i));
    if (prev == Tag::kMD || prev == Tag::kPRP) {
      tags[i] = Tag::kVB;
      continue;
    }
    if (i > 0) {
      const std::string prev_lower = to_lower(tokens[i - 1].surface);
      if (prev_lower == "to" && tags[i - 1] == Tag::kIN) {
        tags[i] = Tag::kVB;
        continue;
      }
    }
    tags[i] = Tag::kNN;
  }
  return tags;
}

}  // namespace lidetect::gram
