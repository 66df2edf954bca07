#pragma once

#include <optional>
#include <vector>

#include "finestyle/morphology.hpp"
#include "finestyle/tree.hpp"

namespace finestyle {

// Decomposition of a root clause. Paths index into the analyzed tree.
struct ClauseAnalysis {
  NodePath clause;
  NodePath subject;
  // VP spine from the clause's VP down to the VP headed by the main verb.
  std::vector<NodePath> chain;
  // Head verb of each chain VP: verbs.front() is finite, verbs.back() is the
  // main verb; the ones in between are auxiliaries.
  std::vector<NodePath> verbs;
  std::optional<NodePath> negation;  // "n't" or "not" after the finite verb
  std::optional<NodePath> object;    // direct-object NP of the main verb
  // Main-VP children after the object (or after the verb when there is none).
  std::vector<NodePath> trailing_modifiers;

  VerbForm finite_form = VerbForm::Base;
  bool finite_is_modal = false;
};

// Throws Inapplicable when the tree has no S root with a subject NP and a
// verb-headed VP.
ClauseAnalysis analyze_clause(const ParseTree& tree, const Morphology& morph = Morphology::english());

// Tense of the root clause (or of each conjoined root clause). "will" counts
// as the future auxiliary; any other modal makes the transfer Inapplicable.
// A clause already in the target tense is returned unchanged.
ParseTree to_tense(const ParseTree& tree, Tense target, const Morphology& morph = Morphology::english());

ParseTree active_to_passive(const ParseTree& tree, const Morphology& morph = Morphology::english());

// Throws MissingAgent for a passive clause without a "by" phrase.
ParseTree passive_to_active(const ParseTree& tree, const Morphology& morph = Morphology::english());

enum class PpDirection { FrontToBack, BackToFront };

// Front-to-back needs a PP as the clause's first constituent; back-to-front
// takes the clause's last constituent if it is a PP, else the last PP at the
// end of the VP spine.
ParseTree move_pp(const ParseTree& tree, PpDirection direction);

}  // namespace finestyle
