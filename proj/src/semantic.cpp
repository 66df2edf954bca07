#include "finestyle/semantic.hpp"

#include <functional>
#include <set>

#include "finestyle/error.hpp"
#include "finestyle/morphology.hpp"
#include "finestyle/syntax.hpp"

namespace finestyle {

namespace {

using Ancestors = std::vector<const ParseTree*>;
using Predicate = std::function<bool(const ParseTree&, const Ancestors&, std::size_t first_token)>;

struct Pruner {
  const Predicate& remove;
  std::vector<Deletion> deletions;
  std::size_t token = 0;
  Ancestors stack;

  // Returns false when the node disappears (deleted or emptied).
  bool visit(const ParseTree& in, ParseTree& out) {
    std::size_t first = token;
    if (!stack.empty() && remove(in, stack, first)) {
      token += in.leaf_count();
      deletions.push_back({first, token, in.label});
      return false;
    }
    if (in.is_preterminal()) {
      ++token;
      out = in;
      return true;
    }
    out.label = in.label;
    out.children.clear();
    stack.push_back(&in);
    for (const auto& c : in.children) {
      ParseTree kept;
      if (visit(c, kept)) out.children.push_back(std::move(kept));
    }
    stack.pop_back();
    return !out.children.empty();
  }
};

DeletionResult run(const ParseTree& tree, const Predicate& remove, const char* what) {
  Pruner p{remove, {}, 0, {}};
  DeletionResult r;
  bool alive = p.visit(tree, r.tree);
  if (p.deletions.empty()) inapplicable(std::string("nothing to delete: no ") + what);
  if (!alive) inapplicable("deletion would remove the whole sentence");
  r.deletions = std::move(p.deletions);
  r.sentence = extract_sentence(r.tree);
  return r;
}

bool is_nominal(std::string_view cat) { return cat == "NP" || cat == "NX" || cat == "NML" || cat == "WHNP"; }

bool has_head_word(const ParseTree& t) {
  if (t.is_preterminal()) return is_noun_tag(t.label) || t.label == "PRP" || t.label == "CD";
  for (const auto& c : t.children) {
    if (has_head_word(c)) return true;
  }
  return false;
}

void collect_verb_leaves(const ParseTree& tree, std::set<const ParseTree*>& out) {
  try {
    ClauseAnalysis ca = analyze_clause(tree);
    for (const auto& p : ca.verbs) out.insert(&node_at(tree, p));
  } catch (const Error&) {
    // no analyzable clause; nothing to protect
  }
}

bool dominates_any(const ParseTree& t, const std::set<const ParseTree*>& leaves) {
  if (leaves.count(&t)) return true;
  for (const auto& c : t.children) {
    if (dominates_any(c, leaves)) return true;
  }
  return false;
}

// PP that is the first complement of a form of "be" ("the meat is on the table").
bool is_copular_predicate(const ParseTree& pp, const ParseTree& parent) {
  if (parent.category() != "VP") return false;
  const auto& morph = Morphology::english();
  for (std::size_t i = 0; i < parent.children.size(); ++i) {
    const ParseTree& c = parent.children[i];
    if (!c.is_preterminal() || !is_verb_tag(c.label) || c.label == "MD") continue;
    if (morph.lemmatize(*c.word, c.label) != "be") return false;
    for (std::size_t j = i + 1; j < parent.children.size(); ++j) {
      const ParseTree& comp = parent.children[j];
      if (comp.category() == "ADVP" || is_adverb_tag(comp.label)) continue;
      return &comp == &pp;
    }
    return false;
  }
  return false;
}

}  // namespace

DeletionResult remove_adj_adv(const ParseTree& tree) {
  Predicate pred = [](const ParseTree& t, const Ancestors& up, std::size_t) {
    if (!t.is_preterminal()) return false;
    if (is_adverb_tag(t.label)) return *t.word != "not" && *t.word != "n't";
    if (!is_adjective_tag(t.label)) return false;
    for (auto it = up.rbegin(); it != up.rend(); ++it) {
      std::string cat = (*it)->category();
      if (cat == "ADJP") continue;
      return is_nominal(cat) && has_head_word(**it);
    }
    return false;
  };
  return run(tree, pred, "adjective or adverb");
}

DeletionResult remove_pp(const ParseTree& tree) {
  std::set<const ParseTree*> verbs;
  collect_verb_leaves(tree, verbs);
  Predicate pred = [&verbs](const ParseTree& t, const Ancestors& up, std::size_t) {
    if (t.is_preterminal() || t.category() != "PP") return false;
    if (dominates_any(t, verbs)) return false;
    return !is_copular_predicate(t, *up.back());
  };
  return run(tree, pred, "prepositional phrase");
}

DeletionResult remove_substatement(const ParseTree& tree) {
  Predicate pred = [](const ParseTree& t, const Ancestors&, std::size_t) {
    return !t.is_preterminal() && t.category() == "SBAR";
  };
  return run(tree, pred, "subordinate clause");
}

}  // namespace finestyle
