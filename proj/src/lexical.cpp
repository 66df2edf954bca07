#include "finestyle/lexical.hpp"

#include <functional>

#include "finestyle/error.hpp"

namespace finestyle {

std::string_view to_string(LexicalRelation rel) {
  switch (rel) {
    case LexicalRelation::Synonym: return "synonym";
    case LexicalRelation::Antonym: return "antonym";
    case LexicalRelation::MostFrequent: return "most-frequent";
    case LexicalRelation::LeastFrequent: return "least-frequent";
  }
  return "synonym";
}

namespace {

// Which leaves a lexical transfer may touch. Proper nouns, comparatives and
// the auxiliary-capable verbs are left alone.
std::optional<PosClass> eligible_class(const ParseTree& leaf, const Morphology& morph) {
  const std::string& tag = leaf.label;
  if (tag == "NN" || tag == "NNS") return PosClass::Noun;
  if (tag == "JJ") return PosClass::Adjective;
  if (tag != "MD" && is_verb_tag(tag)) {
    std::string lemma = morph.lemmatize(*leaf.word, tag);
    if (lemma == "be" || lemma == "have" || lemma == "do") return std::nullopt;
    return PosClass::Verb;
  }
  return std::nullopt;
}

std::string reinflect(std::string_view lemma, std::string_view tag, const Morphology& morph) {
  if (tag == "NNS") return morph.pluralize_noun(lemma);
  if (auto form = verb_form_of_tag(tag)) return morph.inflect_verb(lemma, *form);
  return std::string(lemma);
}

// chooser(lemma, class) returns the substitute lemma or an empty string.
using Chooser = std::function<std::string(const std::string&, PosClass)>;

LexicalResult rewrite(const ParseTree& tree, std::optional<PosClass> only, LexicalRelation rel,
                      const Chooser& choose, const Morphology& morph) {
  LexicalResult out;
  out.tree = tree;
  std::size_t index = 0;
  std::function<void(ParseTree&)> walk = [&](ParseTree& t) {
    if (!t.is_preterminal()) {
      for (auto& c : t.children) walk(c);
      return;
    }
    std::size_t here = index++;
    auto cls = eligible_class(t, morph);
    if (!cls || (only && *cls != *only)) return;
    for (const auto& lemma : morph.lemma_candidates(*t.word, t.label)) {
      std::string sub = choose(lemma, *cls);
      if (sub.empty()) continue;
      std::string surface = reinflect(sub, t.label, morph);
      if (surface != *t.word) {
        out.replacements.push_back({here, *t.word, surface, rel, lemma, sub});
        t.word = surface;
      }
      break;
    }
  };
  walk(out.tree);
  if (out.replacements.empty()) inapplicable("no word with a usable lexicon entry");
  out.sentence = extract_sentence(out.tree);
  return out;
}

}  // namespace

LexicalResult replace_lexical(const ParseTree& tree, PosClass pos, Relation rel, const Lexicon& lexicon,
                              const Morphology& morph) {
  Chooser choose = [&](const std::string& lemma, PosClass cls) -> std::string {
    const auto& list = lexicon.related(lemma, cls, rel);
    return list.empty() ? std::string() : list.front();
  };
  auto lrel = rel == Relation::Synonym ? LexicalRelation::Synonym : LexicalRelation::Antonym;
  return rewrite(tree, pos, lrel, choose, morph);
}

LexicalResult replace_by_frequency(const ParseTree& tree, FrequencyMode mode, const Lexicon& lexicon,
                                   const Morphology& morph) {
  Chooser choose = [&](const std::string& lemma, PosClass cls) -> std::string {
    if (lexicon.synonyms(lemma, cls).empty()) return {};
    return rank_synonyms(lexicon, lemma, cls, mode);
  };
  auto lrel = mode == FrequencyMode::MostFrequent ? LexicalRelation::MostFrequent
                                                  : LexicalRelation::LeastFrequent;
  return rewrite(tree, std::nullopt, lrel, choose, morph);
}

}  // namespace finestyle
