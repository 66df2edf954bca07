#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "finestyle/lexicon.hpp"
#include "finestyle/morphology.hpp"
#include "finestyle/tree.hpp"

namespace finestyle {

enum class LexicalRelation { Synonym, Antonym, MostFrequent, LeastFrequent };
std::string_view to_string(LexicalRelation rel);

struct Replacement {
  std::size_t token_index = 0;
  std::string original;
  std::string substitute;
  LexicalRelation relation = LexicalRelation::Synonym;
  std::string original_lemma;
  std::string substitute_lemma;
};

struct LexicalResult {
  ParseTree tree;
  Sentence sentence;
  std::vector<Replacement> replacements;
};

// Replaces every eligible leaf of the class (nouns NN/NNS, verbs VB* other
// than be/have/do, adjectives JJ) whose lemma has a related lemma, using the
// first one listed. Verbs keep their form, plural nouns are re-pluralized.
// Throws Inapplicable if nothing was replaced.
LexicalResult replace_lexical(const ParseTree& tree, PosClass pos, Relation rel, const Lexicon& lexicon,
                              const Morphology& morph = Morphology::english());

// As above over all three classes, picking the most or least frequent synonym.
LexicalResult replace_by_frequency(const ParseTree& tree, FrequencyMode mode, const Lexicon& lexicon,
                                   const Morphology& morph = Morphology::english());

}  // namespace finestyle
