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

#include "lidetect/parse.hpp"

#include <set>

namespace lidetect::gram {

namespace {

bool np_tag(Tag t) {
  switch (t) {
    case Tag::kPDT:
    case Tag::kDT:
    case Tag::kJJ:
    case Tag::kNN:
    case Tag::kNNS:
    case Tag::kPRP:
      return true;
    default:
      return false;
  }
}

bool adverb_tag(Tag t) {
  return t == Tag::kRB || t == Tag::kRBR || t == Tag::kRBS;
}

struct Opener {
  int length = 0;     // tokens forming the subordinator
  bool conditional = false;
};

const std::set<std::string>& conditional_in_stems() {
  static const std::set<std::string> stems = {"if", "unless", "when", "until"};
  return stems;
}

std::optional<Opener> sbar_opener(const text::Sentence& s,
                                  const std::vector<Tag>& tags, int i,
                                  int hi) {
  auto stem_at = [&](int k) -> const std::string& {
    return s.tokens[static_cast<std::size_t>(k)].stem;
  };
  // Multiword subordinators first.
  if (i + 2 < hi && stem_at(i) == "as" && stem_at(i + 1) == "long" &&
      stem_at(i + 2) == "as") {
    return Opener{3, true};
  }
  if (i + 2 < hi && stem_at(i) == "so" && stem_at(i + 1) == "long" &&
      stem_at(i + 2) == "as") {
    return Opener{3, true};
  }
  if (i + 1 < hi && stem_at(i) == "provid" && stem_at(i + 1) == "that") {
    return Opener{2, true};
  }
  Tag t = tags[static_cast<std::size_t>(i)];
  if (t == Tag::kIN && conditional_in_stems().count(stem_at(i)) > 0) {
    return Opener{1, true};
  }
  if (t == Tag::kWDT) return Opener{1, false};
  return std::nullopt;
}

class Chunker {
 public:
  Chunker(const text::Sentence& sentence, const std::vector<Tag>& tags)
      : sentence_(sentence), tags_(tags) {}

  std::vector<ParseNode> sequence(int lo, int hi, int depth) {
    std::vector<ParseNode> nodes;
    int i = lo;
    while (i < hi) {
      if (depth == 0) {
        if (auto opener = sbar_opener(sentence_, tags_, i, hi)) {
          nodes.push_back(build_sbar(i, hi, *opener));
          i = sbar_end_;
          continue;
        }
      }
      if (vp_starts_at(i, hi, depth)) {
        nodes.push_back(build_vp(i, hi, depth));
        i = vp_end_;
        continue;
      }
      if (np_tag(tag(i))) {
        int j = i;
        while (j < hi && np_tag(tag(j))) ++j;
        nodes.push_back(make_np(i, j));
        i = j;
        continue;
      }
      nodes.push_back(leaf(i));
      ++i;
    }
    return nodes;
  }

 private:
  Tag tag(int i) const { return tags_[static_cast<std::size_t>(i)]; }

  ParseNode leaf(int i) const {
    ParseNode n;
    n.tag = tag(i);
    n.token_index = i;
    return n;
  }

  ParseNode make_np(int lo, int hi) const {
    ParseNode np;
    np.tag = Tag::kNP;
    for (int i = lo; i < hi; ++i) np.children.push_back(leaf(i));
    return np;
  }

  bool vp_starts_at(int i, int hi, int depth) const {
    int j = i;
    while (j < hi && adverb_tag(tag(j))) ++j;
    if (j >= hi) return false;
    if (depth == 0 && sbar_opener(sentence_, tags_, j, hi)) return false;
    return tag(j) == Tag::kMD || is_verb(tag(j));
  }

  // SBAR: subordinator leaves plus the chunked clause, up to the next comma
  // at this level or the end of the range.
  ParseNode build_sbar(int i, int hi, const Opener& opener) {
    int body = i + opener.length;
    int end = body;
    while (end < hi && !(tag(end) == Tag::kPunct &&
                         sentence_.tokens[static_cast<std::size_t>(end)]
                                 .surface == ",")) {
      ++end;
    }
    ParseNode sbar;
    sbar.tag = Tag::kSBAR;
    for (int k = i; k < body; ++k) sbar.children.push_back(leaf(k));
    for (ParseNode& child : sequence(body, end, 1)) {
      sbar.children.push_back(std::move(child));
    }
    sbar_end_ = end;
    return sbar;
  }

  // VP: leading adverbs, a verb group, then complements (NPs, prepositions,
  // participles, adverbs, a trailing SBAR). When the verb group has two or
  // more verbs the auxiliaries form an outer shell around an inner VP headed
  // by the last verb, mirroring "can not [refuse ...]".
  ParseNode build_vp(int i, int hi, int depth) {
    std::vector<int> head;
    int j = i;
    while (j < hi && adverb_tag(tag(j))) head.push_back(j++);
    int last_verb = -1;
    while (j < hi) {
      Tag t = tag(j);
      if (depth == 0 && sbar_opener(sentence_, tags_, j, hi)) break;
      if (t == Tag::kMD || is_verb(t)) {
        head.push_back(j);
        last_verb = j;
        ++j;
        continue;
      }
      if (adverb_tag(t) && j + 1 < hi &&
          (tag(j + 1) == Tag::kMD || is_verb(tag(j + 1))) &&
          !(depth == 0 && sbar_opener(sentence_, tags_, j + 1, hi))) {
        head.push_back(j);  // adverb inside the verb group ("can not refuse")
        ++j;
        continue;
      }
      break;
    }

    int verb_count = 0;
    for (int k : head) {
      if (tag(k) == Tag::kMD || is_verb(tag(k))) ++verb_count;
    }

    ParseNode inner;
    inner.tag = Tag::kVP;
    // Complements attach to the innermost verb.
    std::vector<ParseNode> complements;
    while (j < hi) {
      Tag t = tag(j);
      if (depth == 0) {
        if (auto opener = sbar_opener(sentence_, tags_, j, hi)) {
          complements.push_back(build_sbar(j, hi, *opener));
          j = sbar_end_;
          continue;
        }
      }
      if (np_tag(t)) {
        int k = j;
        while (k < hi && np_tag(tag(k))) ++k;
        complements.push_back(make_np(j, k));
        j = k;
        continue;
      }
      if (t == Tag::kIN || t == Tag::kVBG || t == Tag::kVBN || adverb_tag(t)) {
        complements.push_back(leaf(j));
        ++j;
        continue;
      }
      break;
    }
    vp_end_ = j;

    if (verb_count >= 2 && last_verb >= 0) {
      ParseNode outer;
      outer.tag = Tag::kVP;
      for (int k : head) {
        if (k < last_verb) outer.children.push_back(leaf(k));
      }
      inner.children.push_back(leaf(last_verb));
      for (ParseNode& c : complements) inner.children.push_back(std::move(c));
      outer.children.push_back(std::move(inner));
      return outer;
    }
    ParseNode vp;
    vp.tag = Tag::kVP;
    for (int k : head) vp.children.push_back(leaf(k));
    for (ParseNode& c : complements) vp.children.push_back(std::move(c));
    return vp;
  }

  const text::Sentence& sentence_;
  const std::vector<Tag>& tags_;
  int sbar_end_ = 0;
  int vp_end_ = 0;
};

void check_leaf_order(const ParseNode& root, int num_tokens) {
  std::vector<const ParseNode*> leaves;
  collect_leaves(root, &leaves);
  if (static_cast<int>(leaves.size()) != num_tokens) {
    throw std::logic_error("chunker dropped or duplicated tokens");
  }
  for (int i = 0; i < num_tokens; ++i) {
    if (!leaves[static_cast<std::size_t>(i)]->token_index.has_value() ||
        *leaves[static_cast<std::size_t>(i)]->token_index != i) {
      throw std::logic_error("chunker produced out-of-order leaves");
    }
  }
}

}  // namespace

ParseNode parse_sentence(const text::Sentence& sentence,
                         const std::vector<Tag>& pos_tags) {
  if (pos_tags.size() != sentence.tokens.size()) {
    throw TagAlphabetViolation("tag count does not match token count");
  }
  for (Tag t : pos_tags) {
    if (!is_token_tag(t)) {
      throw TagAlphabetViolation("phrase tag used as a token tag: " +
                                 to_string(t));
    }
  }
  Chunker chunker(sentence, pos_tags);
  ParseNode s;
  s.tag = Tag::kS;
  s.children = chunker.sequence(0, static_cast<int>(sentence.tokens.size()), 0);
  ParseNode root;
  root.tag = Tag::kRoot;
  root.children.push_back(std::move(s));
  check_leaf_order(root, static_cast<int>(sentence.tokens.size()));
  return root;
}

void collect_leaves(const ParseNode& node,
                    std::vector<const ParseNode*>* leaves) {
  if (node.token_index.has_value()) {
    leaves->push_back(&node);
    return;
  }
  for (const ParseNode& child : node.children) collect_leaves(child, leaves);
}

namespace {
void chains_rec(const ParseNode& node,
                std::vector<const ParseNode*>& stack,
                std::vector<std::vector<const ParseNode*>>* out) {
  if (node.token_index.has_value()) {
    (*out)[static_cast<std::size_t>(*node.token_index)] = stack;
    return;
  }
  stack.push_back(&node);
  for (const ParseNode& child : node.children) chains_rec(child, stack, out);
  stack.pop_back();
}
}  // namespace

std::vector<std::vector<const ParseNode*>> ancestor_chains(
    const ParseNode& root, int num_tokens) {
  std::vector<std::vector<const ParseNode*>> out(
      static_cast<std::size_t>(num_tokens));
  std::vector<const ParseNode*> stack;
  chains_rec(root, stack, &out);
  return out;
}

std::vector<int> direct_token_children(const ParseNode& node) {
  std::vector<int> out;
  for (const ParseNode& child : node.children) {
    if (child.token_index.has_value()) out.push_back(*child.token_index);
  }
  return out;
}

std::vector<int> vp_chain_tokens(const ParseNode& vp) {
  std::vector<int> out;
  for (const ParseNode& child : vp.children) {
    if (child.token_index.has_value()) {
      out.push_back(*child.token_index);
    } else if (child.tag == Tag::kVP) {
      std::vector<int> nested = vp_chain_tokens(child);
      out.insert(out.end(), nested.begin(), nested.end());
    }
  }
  return out;
}

bool is_conditional_sbar(const ParseNode& sbar,
                         const text::Sentence& sentence) {
  std::vector<const ParseNode*> leaves;
  collect_leaves(sbar, &leaves);
  if (leaves.empty()) return false;
  auto stem_of = [&](std::size_t k) -> const std::string& {
    return sentence.tokens[static_cast<std::size_t>(*leaves[k]->token_index)]
        .stem;
  };
  const std::string& first = stem_of(0);
  if (conditional_in_stems().count(first) > 0) return true;
  if (leaves.size() >= 2 && first == "provid" && stem_of(1) == "that") {
    return true;
  }
  if (leaves.size() >= 3 && (first == "as" || first == "so") &&
      stem_of(1) == "long" && stem_of(2) == "as") {
    return true;
  }
  return false;
}

std::string tree_to_string(const ParseNode& node,
                           const text::Sentence& sentence) {
  if (node.token_index.has_value()) {
    return "(" + to_string(node.tag) + " " +
           sentence.tokens[static_cast<std::size_t>(*node.token_index)].surface +
           ")";
  }
  std::string out = "(" + to_string(node.tag);
  for (const ParseNode& child : node.children) {
    out += " " + tree_to_string(child, sentence);
  }
  out += ")";
  return out;
}

namespace {
bool path_rec(const ParseNode& node, int token_index, std::vector<Tag>* path) {
  path->push_back(node.tag);
  if (node.token_index.has_value()) {
    if (*node.token_index == token_index) return true;
    path->pop_back();
    return false;
  }
  for (const ParseNode& child : node.children) {
    if (path_rec(child, token_index, path)) return true;
  }
  path->pop_back();
  return false;
}
}  // namespace

std::vector<Tag> leaf_path(const ParseNode& root, int token_index) {
  std::vector<Tag> path;
  path_rec(root, token_index, &path);
  return path;
}

}  // namespace lidetect::gram
