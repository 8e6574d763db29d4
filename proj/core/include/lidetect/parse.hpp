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

#ifndef LIDETECT_PARSE_HPP_
#define LIDETECT_PARSE_HPP_

#include <optional>
#include <stdexcept>
#include <vector>

#include "lidetect/pos.hpp"

namespace lidetect::gram {

struct ParseNode {
  Tag tag = Tag::kRoot;
  std::vector<ParseNode> children;
  std::optional<int> token_index;  // leaves only
};

struct TagAlphabetViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic chunk grammar: maximal NP runs, VP chunks with an auxiliary
// shell around the main verb ("can not [refuse ...]"), SBAR opened at
// subordinators (if/unless/when/until, "provided that", "as long as") and
// wh-words, one nesting level. Every token is a leaf exactly once; the leaf
// order equals the token order.
ParseNode parse_sentence(const text::Sentence& sentence,
                         const std::vector<Tag>& pos_tags);

// --- tree helpers -----------------------------------------------------

void collect_leaves(const ParseNode& node,
                    std::vector<const ParseNode*>* leaves);

// For each token, the internal nodes from ROOT down to (excluding) its leaf.
std::vector<std::vector<const ParseNode*>> ancestor_chains(
    const ParseNode& root, int num_tokens);

// Token indices that are direct children of `node` (no descent).
std::vector<int> direct_token_children(const ParseNode& node);

// Direct tokens of a VP plus, recursively, of nested VP children; does not
// descend into NP or SBAR subtrees. This is the verb chain of a predicate.
std::vector<int> vp_chain_tokens(const ParseNode& vp);

// True when the SBAR is headed by a conditional subordinator (if, unless,
// when, until, provided that, as/so long as). Wh-headed clauses are
// relative, not conditional.
bool is_conditional_sbar(const ParseNode& sbar, const text::Sentence& sentence);

std::string tree_to_string(const ParseNode& node,
                           const text::Sentence& sentence);

// Root-to-leaf tag path for one token, e.g. {ROOT, S, VP, VP, VB}.
std::vector<Tag> leaf_path(const ParseNode& root, int token_index);

}  // namespace lidetect::gram

#endif  // LIDETECT_PARSE_HPP_
