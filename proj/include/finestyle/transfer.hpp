#pragma once

#include <string_view>
#include <vector>

#include "finestyle/lexical.hpp"
#include "finestyle/lexicon.hpp"
#include "finestyle/morphology.hpp"
#include "finestyle/semantic.hpp"
#include "finestyle/tree.hpp"

namespace finestyle {

enum class TransferId {
  NounSynonym,
  NounAntonym,
  VerbSynonym,
  VerbAntonym,
  AdjSynonym,
  AdjAntonym,
  MostFrequentSynonym,
  LeastFrequentSynonym,
  ToFuture,
  ToPast,
  ToPresent,
  ActiveToPassive,
  PassiveToActive,
  PpFrontToBack,
  PpBackToFront,
  AdjAdvRemoval,
  PpRemoval,
  SubstatementRemoval,
};

struct TransferInfo {
  TransferId id;
  std::string_view name;    // CLI name, e.g. "to-future"
  std::string_view family;  // composition dimension it belongs to
  int token;                // its value in that dimension (1-based)
  bool needs_lexicon;
};

const std::vector<TransferInfo>& transfer_catalog();
const TransferInfo& transfer_info(TransferId id);
// Throws UnknownTransfer.
TransferId transfer_by_name(std::string_view name);

// A style dimension: token k (1-based) selects tokens[k-1]; 0 means unchanged.
struct Dimension {
  std::string_view name;
  std::vector<TransferId> tokens;
};

const std::vector<Dimension>& dimension_catalog();
// Throws UnknownTransfer.
const Dimension& dimension_by_name(std::string_view name);

struct TransferContext {
  const Lexicon* lexicon = nullptr;
  const Morphology* morph = &Morphology::english();
};

struct TransferOutcome {
  ParseTree tree;
  Sentence sentence;
  std::vector<Replacement> replacements;
  std::vector<Deletion> deletions;
};

// Runs one transfer on a normalized tree. A transfer that leaves the token
// sequence unchanged is reported as Inapplicable.
TransferOutcome apply_transfer(TransferId id, const ParseTree& tree, const TransferContext& ctx);

}  // namespace finestyle
