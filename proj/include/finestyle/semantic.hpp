#pragma once

#include <string>
#include <vector>

#include "finestyle/tree.hpp"

namespace finestyle {

// Half-open token span [span_start, span_end) of the input sentence.
struct Deletion {
  std::size_t span_start = 0;
  std::size_t span_end = 0;
  std::string node_label;
};

struct DeletionResult {
  ParseTree tree;
  Sentence sentence;
  std::vector<Deletion> deletions;  // in surface order
};

// Adverbs (except the negators "not" and "n't") and attributive adjectives,
// i.e. JJ* whose nearest phrasal ancestor other than ADJP is an NP. An
// adjective is kept when deleting it would leave its NP without a noun.
DeletionResult remove_adj_adv(const ParseTree& tree);

// Every outermost PP, except one holding the clause's main verb and the
// first complement of a copular verb ("is on the table").
DeletionResult remove_pp(const ParseTree& tree);

// Every outermost SBAR below the root.
DeletionResult remove_substatement(const ParseTree& tree);

}  // namespace finestyle
