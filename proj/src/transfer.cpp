#include "finestyle/transfer.hpp"

#include <algorithm>

#include "finestyle/error.hpp"
#include "finestyle/syntax.hpp"

namespace finestyle {

const std::vector<TransferInfo>& transfer_catalog() {
  static const std::vector<TransferInfo> catalog = {
      {TransferId::NounSynonym, "noun-synonym", "noun-lexical", 1, true},
      {TransferId::NounAntonym, "noun-antonym", "noun-lexical", 2, true},
      {TransferId::VerbSynonym, "verb-synonym", "verb-lexical", 1, true},
      {TransferId::VerbAntonym, "verb-antonym", "verb-lexical", 2, true},
      {TransferId::AdjSynonym, "adj-synonym", "adj-lexical", 1, true},
      {TransferId::AdjAntonym, "adj-antonym", "adj-lexical", 2, true},
      {TransferId::MostFrequentSynonym, "most-frequent-synonym", "frequency", 1, true},
      {TransferId::LeastFrequentSynonym, "least-frequent-synonym", "frequency", 2, true},
      {TransferId::ToFuture, "to-future", "tense", 1, false},
      {TransferId::ToPast, "to-past", "tense", 2, false},
      {TransferId::ToPresent, "to-present", "tense", 3, false},
      {TransferId::ActiveToPassive, "active-to-passive", "voice", 1, false},
      {TransferId::PassiveToActive, "passive-to-active", "voice", 2, false},
      {TransferId::PpFrontToBack, "pp-front-to-back", "pp-position", 1, false},
      {TransferId::PpBackToFront, "pp-back-to-front", "pp-position", 2, false},
      {TransferId::AdjAdvRemoval, "adj-adv-removal", "adj-adv-removal", 1, false},
      {TransferId::PpRemoval, "pp-removal", "pp-removal", 1, false},
      {TransferId::SubstatementRemoval, "substatement-removal", "substatement-removal", 1, false},
  };
  return catalog;
}

const TransferInfo& transfer_info(TransferId id) {
  return transfer_catalog()[static_cast<std::size_t>(id)];
}

TransferId transfer_by_name(std::string_view name) {
  for (const auto& t : transfer_catalog()) {
    if (t.name == name) return t.id;
  }
  fail(ErrorCode::UnknownTransfer, std::string(name));
}

const std::vector<Dimension>& dimension_catalog() {
  static const std::vector<Dimension> dims = [] {
    std::vector<Dimension> out;
    for (const auto& t : transfer_catalog()) {
      auto it = std::find_if(out.begin(), out.end(), [&](const Dimension& d) { return d.name == t.family; });
      if (it == out.end()) {
        out.push_back({t.family, {}});
        it = out.end() - 1;
      }
      it->tokens.push_back(t.id);
    }
    return out;
  }();
  return dims;
}

const Dimension& dimension_by_name(std::string_view name) {
  for (const auto& d : dimension_catalog()) {
    if (d.name == name) return d;
  }
  fail(ErrorCode::UnknownTransfer, "no dimension named " + std::string(name));
}

namespace {

TransferOutcome from_tree(ParseTree tree) {
  TransferOutcome out;
  out.sentence = extract_sentence(tree);
  out.tree = std::move(tree);
  return out;
}

TransferOutcome from_lexical(LexicalResult r) {
  return {std::move(r.tree), std::move(r.sentence), std::move(r.replacements), {}};
}

TransferOutcome from_deletion(DeletionResult r) {
  return {std::move(r.tree), std::move(r.sentence), {}, std::move(r.deletions)};
}

TransferOutcome dispatch(TransferId id, const ParseTree& tree, const TransferContext& ctx) {
  const Morphology& morph = *ctx.morph;
  if (transfer_info(id).needs_lexicon && !ctx.lexicon)
    fail(ErrorCode::InvalidArgument, std::string(transfer_info(id).name) + " needs a lexicon");
  const Lexicon* lex = ctx.lexicon;
  switch (id) {
    case TransferId::NounSynonym: return from_lexical(replace_lexical(tree, PosClass::Noun, Relation::Synonym, *lex, morph));
    case TransferId::NounAntonym: return from_lexical(replace_lexical(tree, PosClass::Noun, Relation::Antonym, *lex, morph));
    case TransferId::VerbSynonym: return from_lexical(replace_lexical(tree, PosClass::Verb, Relation::Synonym, *lex, morph));
    case TransferId::VerbAntonym: return from_lexical(replace_lexical(tree, PosClass::Verb, Relation::Antonym, *lex, morph));
    case TransferId::AdjSynonym: return from_lexical(replace_lexical(tree, PosClass::Adjective, Relation::Synonym, *lex, morph));
    case TransferId::AdjAntonym: return from_lexical(replace_lexical(tree, PosClass::Adjective, Relation::Antonym, *lex, morph));
    case TransferId::MostFrequentSynonym: return from_lexical(replace_by_frequency(tree, FrequencyMode::MostFrequent, *lex, morph));
    case TransferId::LeastFrequentSynonym: return from_lexical(replace_by_frequency(tree, FrequencyMode::LeastFrequent, *lex, morph));
    case TransferId::ToFuture: return from_tree(to_tense(tree, Tense::Future, morph));
    case TransferId::ToPast: return from_tree(to_tense(tree, Tense::Past, morph));
    case TransferId::ToPresent: return from_tree(to_tense(tree, Tense::Present, morph));
    case TransferId::ActiveToPassive: return from_tree(active_to_passive(tree, morph));
    case TransferId::PassiveToActive: return from_tree(passive_to_active(tree, morph));
    case TransferId::PpFrontToBack: return from_tree(move_pp(tree, PpDirection::FrontToBack));
    case TransferId::PpBackToFront: return from_tree(move_pp(tree, PpDirection::BackToFront));
    case TransferId::AdjAdvRemoval: return from_deletion(remove_adj_adv(tree));
    case TransferId::PpRemoval: return from_deletion(remove_pp(tree));
    case TransferId::SubstatementRemoval: return from_deletion(remove_substatement(tree));
  }
  fail(ErrorCode::UnknownTransfer, "unhandled transfer id");
}

}  // namespace

TransferOutcome apply_transfer(TransferId id, const ParseTree& tree, const TransferContext& ctx) {
  TransferOutcome out = dispatch(id, tree, ctx);
  if (out.sentence == extract_sentence(tree)) inapplicable("transfer leaves the sentence unchanged");
  return out;
}

}  // namespace finestyle
