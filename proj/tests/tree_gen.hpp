#pragma once

#include <random>
#include <string>
#include <vector>

#include "finestyle/morphology.hpp"
#include "finestyle/tree.hpp"

namespace testgen {

inline const std::string& pick(std::mt19937_64& rng, const std::vector<std::string>& v) {
  return v[rng() % v.size()];
}

// Arbitrary well-formed bracketing; not linguistically meaningful.
inline finestyle::ParseTree random_tree(std::mt19937_64& rng, int max_depth) {
  static const std::vector<std::string> phrasal = {"S", "NP", "VP", "PP", "SBAR", "ADJP", "NP-SBJ"};
  static const std::vector<std::string> tags = {"NN", "NNS", "DT", "VBD", "IN", "JJ", "RB", ",", "CD"};
  static const std::vector<std::string> words = {"the", "cat", "ran", "of", "big", "n't", ",", "7",
                                                 "quickly", "Sen.", "$", "ran-away"};
  if (max_depth <= 1 || rng() % 3 == 0) {
    return finestyle::ParseTree::leaf(pick(rng, tags), pick(rng, words));
  }
  std::vector<finestyle::ParseTree> kids;
  std::size_t n = 1 + rng() % 4;
  for (std::size_t i = 0; i < n; ++i) kids.push_back(random_tree(rng, max_depth - 1));
  return finestyle::ParseTree::node(pick(rng, phrasal), std::move(kids));
}


// Normalized declarative clause with a random subject, tense, aspect,
// negation, object and trailing PP. Always analyzable as a root clause.
inline finestyle::ParseTree random_clause(std::mt19937_64& rng) {
  using finestyle::ParseTree;
  using finestyle::Tense;
  using finestyle::VerbForm;
  const auto& morph = finestyle::Morphology::english();
  static const std::vector<std::string> verbs = {"take", "see", "open", "carry", "stop", "write",
                                                 "give", "watch", "find", "study", "hold", "push"};
  static const std::vector<std::string> nouns = {"dog", "report", "market", "price", "bank", "plan"};

  auto np = [&](bool subject) {
    switch (rng() % 4) {
      case 0: {
        static const std::vector<std::string> subj = {"he", "she", "they", "i", "we", "it"};
        static const std::vector<std::string> obj = {"him", "her", "them", "me", "us", "it"};
        return ParseTree::node("NP", {ParseTree::leaf("PRP", pick(rng, subject ? subj : obj))});
      }
      case 1:
        return ParseTree::node("NP", {ParseTree::leaf("DT", "the"), ParseTree::leaf("NNS", morph.pluralize_noun(pick(rng, nouns)))});
      case 2:
        return ParseTree::node("NP", {ParseTree::leaf("DT", "a"), ParseTree::leaf("JJ", "new"), ParseTree::leaf("NN", pick(rng, nouns))});
      default:
        return ParseTree::node("NP", {ParseTree::leaf("DT", "the"), ParseTree::leaf("NN", pick(rng, nouns))});
    }
  };

  ParseTree subject = np(true);
  auto agr = finestyle::subject_agreement(subject);
  Tense tense = static_cast<Tense>(rng() % 3);
  bool progressive = rng() % 3 == 0;
  bool perfect = rng() % 4 == 0;
  bool negated = rng() % 3 == 0;
  const std::string& lemma = pick(rng, verbs);

  // Verb groups from the innermost outwards: (tag, word) per VP head.
  std::vector<std::pair<std::string, std::string>> heads;
  VerbForm main_form = VerbForm::Base;
  if (progressive) main_form = VerbForm::Gerund;
  else if (perfect) main_form = VerbForm::PastParticiple;
  heads.push_back({std::string(finestyle::tag_of_verb_form(main_form)), morph.inflect_verb(lemma, main_form)});
  if (progressive && perfect) heads.push_back({"VBN", "been"});

  std::string aux = progressive && !perfect ? "be" : perfect ? "have" : "";
  if (tense == Tense::Future) {
    if (!aux.empty()) heads.push_back({"VB", aux});
    heads.push_back({"MD", "will"});
  } else if (!aux.empty()) {
    std::string w = morph.finite_verb(aux, tense, agr);
    heads.push_back({tense == Tense::Past ? "VBD" : (agr == finestyle::Agreement::ThirdSingular ? "VBZ" : "VBP"), w});
  } else if (negated) {
    std::string w = morph.finite_verb("do", tense, agr);
    heads.push_back({tense == Tense::Past ? "VBD" : (agr == finestyle::Agreement::ThirdSingular ? "VBZ" : "VBP"), w});
  } else {
    std::string w = morph.finite_verb(lemma, tense, agr);
    heads.front() = {tense == Tense::Past ? "VBD" : (agr == finestyle::Agreement::ThirdSingular ? "VBZ" : "VBP"), w};
  }

  std::vector<ParseTree> tail;
  if (rng() % 4 != 0) tail.push_back(np(false));
  if (rng() % 2 == 0) {
    tail.push_back(ParseTree::node("PP", {ParseTree::leaf("IN", "in"),
                                          ParseTree::node("NP", {ParseTree::leaf("DT", "the"), ParseTree::leaf("NN", pick(rng, nouns))})}));
  }
  std::vector<ParseTree> kids = {ParseTree::leaf(heads[0].first, heads[0].second)};
  for (auto& t : tail) kids.push_back(std::move(t));
  ParseTree vp = ParseTree::node("VP", std::move(kids));
  for (std::size_t i = 1; i < heads.size(); ++i) {
    std::vector<ParseTree> k = {ParseTree::leaf(heads[i].first, heads[i].second)};
    if (i + 1 == heads.size() && negated) k.push_back(ParseTree::leaf("RB", rng() % 2 ? "not" : "n't"));
    k.push_back(std::move(vp));
    vp = ParseTree::node("VP", std::move(k));
  }
  std::vector<ParseTree> clause = {std::move(subject)};
  if (rng() % 5 == 0) clause.push_back(ParseTree::node("ADVP", {ParseTree::leaf("RB", "also")}));
  clause.push_back(std::move(vp));
  return ParseTree::node("S", std::move(clause));
}

}  // namespace testgen
