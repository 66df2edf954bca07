#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finestyle/tree.hpp"

namespace finestyle {

enum class VerbForm { Base, Past, PastParticiple, Present3sg, PresentNon3sg, Gerund };

std::string_view to_string(VerbForm form);
// Form implied by a Penn verb tag (VB VBD VBN VBZ VBP VBG); nullopt otherwise.
std::optional<VerbForm> verb_form_of_tag(std::string_view tag);
std::string_view tag_of_verb_form(VerbForm form);

enum class Number { Singular, Plural };

// Subject agreement features relevant to English finite verbs.
enum class Agreement { FirstSingular, ThirdSingular, Other };

enum class Tense { Past, Present, Future };

struct IrregularForms {
  std::string past;
  std::string past_participle;
  std::string present_3sg;
};

// lemma -> (past, past participle, 3sg present). Loaded from a four-column TSV.
class IrregularTable {
 public:
  IrregularTable() = default;

  static IrregularTable parse(std::istream& in, const std::string& source_name);
  static IrregularTable load(const std::string& path);
  // The table shipped with the library (data/irregular_verbs.tsv).
  static const IrregularTable& builtin();

  const IrregularForms* find(std::string_view lemma) const;
  std::optional<std::string> lemma_of_past(std::string_view form) const;
  std::optional<std::string> lemma_of_participle(std::string_view form) const;
  std::optional<std::string> lemma_of_3sg(std::string_view form) const;

  const std::map<std::string, IrregularForms, std::less<>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, IrregularForms, std::less<>> entries_;
  std::map<std::string, std::string, std::less<>> by_past_;
  std::map<std::string, std::string, std::less<>> by_participle_;
  std::map<std::string, std::string, std::less<>> by_3sg_;
};

class Morphology {
 public:
  explicit Morphology(IrregularTable table);

  // Shared instance over the built-in irregular table.
  static const Morphology& english();

  // Dictionary citation form. pos must be a noun, verb, adjective or adverb
  // tag (MD counts as a verb tag); anything else throws UnknownPOS.
  std::string lemmatize(std::string_view word, std::string_view pos) const;

  // Plausible lemmas, most likely first; lemmatize() returns the front.
  // Lexicon lookups walk this list the way a dictionary-backed stemmer would.
  std::vector<std::string> lemma_candidates(std::string_view word, std::string_view pos) const;

  std::string inflect_verb(std::string_view lemma, VerbForm form) const;

  // Finite verb in the given tense agreeing with the subject. Handles the
  // person distinctions of "be" (am/is/are, was/were).
  std::string finite_verb(std::string_view lemma, Tense tense, Agreement agreement) const;

  std::string pluralize_noun(std::string_view lemma) const;

  const IrregularTable& irregulars() const { return table_; }

 private:
  std::vector<std::string> verb_candidates(std::string_view word, std::string_view tag) const;

  IrregularTable table_;
};

bool is_noun_tag(std::string_view tag);
bool is_verb_tag(std::string_view tag);  // VB* and MD
bool is_adjective_tag(std::string_view tag);
bool is_adverb_tag(std::string_view tag);
bool is_pronoun_tag(std::string_view tag);

// Rightmost noun/pronoun child is the head; conjoined NPs are plural.
Number np_number(const ParseTree& np);
Agreement subject_agreement(const ParseTree& np);

// Personal pronoun case: he<->him, she<->her, they<->them, we<->us, i<->me.
// "you" and "it" are unchanged; other words are returned as-is.
std::string to_objective_case(std::string_view pronoun);
std::string to_subjective_case(std::string_view pronoun);

}  // namespace finestyle
