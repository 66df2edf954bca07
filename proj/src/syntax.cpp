#include "finestyle/syntax.hpp"

#include <algorithm>

#include "finestyle/error.hpp"
#include "text_util.hpp"

namespace finestyle {

namespace {

bool has_function_tag(const std::string& label, std::string_view tag) {
  if (label.empty() || label.front() == '-') return false;
  std::size_t start = label.find_first_of("-=");
  while (start != std::string::npos) {
    std::size_t end = label.find_first_of("-=", start + 1);
    std::string_view part = std::string_view(label).substr(start + 1, end == std::string::npos ? std::string::npos : end - start - 1);
    if (part == tag) return true;
    start = end;
  }
  return false;
}

bool is_adverbial_np(const ParseTree& np) {
  for (std::string_view t : {"TMP", "ADV", "PRD", "EXT", "LOC", "DIR", "MNR", "VOC"}) {
    if (has_function_tag(np.label, t)) return true;
  }
  return false;
}

bool is_negation(const ParseTree& t) {
  return t.is_preterminal() && t.label == "RB" && (*t.word == "n't" || *t.word == "not");
}

std::optional<std::size_t> head_verb_index(const ParseTree& vp) {
  for (std::size_t i = 0; i < vp.children.size(); ++i) {
    const auto& c = vp.children[i];
    if (c.is_preterminal() && is_verb_tag(c.label)) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> child_after(const ParseTree& node, std::size_t from, std::string_view category) {
  for (std::size_t j = from + 1; j < node.children.size(); ++j) {
    if (node.children[j].category() == category) return j;
  }
  return std::nullopt;
}

bool is_coordinated_vp(const ParseTree& vp) {
  std::size_t vps = 0;
  bool cc = false;
  for (const auto& c : vp.children) {
    if (c.category() == "VP") ++vps;
    if (c.is_preterminal() && c.label == "CC") cc = true;
  }
  return vps >= 2 && cc;
}

bool is_be_or_have(std::string_view lemma) { return lemma == "be" || lemma == "have"; }

NodePath child_path(const NodePath& p, std::size_t i) {
  NodePath out = p;
  out.push_back(i);
  return out;
}

std::string lemma_of(const ParseTree& leaf, const Morphology& morph) {
  return morph.lemmatize(*leaf.word, leaf.label);
}

struct Spine {
  std::vector<NodePath> vps;
  std::vector<NodePath> verbs;
  bool coordinated = false;  // the spine ends in a coordinated VP
};

Spine build_spine(const ParseTree& root, NodePath vp, const Morphology& morph) {
  Spine s;
  for (;;) {
    const ParseTree& node = node_at(root, vp);
    s.vps.push_back(vp);
    auto h = head_verb_index(node);
    if (!h) {
      s.coordinated = is_coordinated_vp(node);
      break;
    }
    s.verbs.push_back(child_path(vp, *h));
    auto comp = child_after(node, *h, "VP");
    if (!comp) break;
    const ParseTree& head = node.children[*h];
    std::string lemma = lemma_of(head, morph);
    if (head.label != "MD" && lemma != "be" && lemma != "have" && lemma != "do") break;
    vp = child_path(vp, *comp);
  }
  return s;
}

struct ClauseSlots {
  NodePath clause;
  NodePath subject;
  NodePath vp;
};

std::optional<ClauseSlots> clause_slots(const ParseTree& root, const NodePath& at) {
  const ParseTree& s = node_at(root, at);
  if (s.is_preterminal() || s.category() != "S") return std::nullopt;
  std::optional<std::size_t> vp;
  for (std::size_t i = 0; i < s.children.size(); ++i) {
    if (s.children[i].category() == "VP") {
      vp = i;
      break;
    }
  }
  if (!vp) return std::nullopt;
  std::optional<std::size_t> subject;
  for (std::size_t i = 0; i < *vp; ++i) {
    const auto& c = s.children[i];
    if (c.category() == "NP" && !c.is_preterminal() && !is_adverbial_np(c)) subject = i;
  }
  if (!subject) return std::nullopt;
  return ClauseSlots{at, child_path(at, *subject), child_path(at, *vp)};
}

// The root clause, or the conjuncts of a root made of coordinated clauses.
std::vector<ClauseSlots> root_clauses(const ParseTree& tree) {
  if (tree.is_preterminal() || tree.category() != "S") inapplicable("root is not a clause");
  if (auto c = clause_slots(tree, {})) return {*c};
  std::vector<ClauseSlots> out;
  for (std::size_t i = 0; i < tree.children.size(); ++i) {
    if (auto c = clause_slots(tree, {i})) out.push_back(*c);
  }
  if (out.empty()) inapplicable("no clause with a subject and a verb phrase");
  return out;
}

void shift_case(ParseTree& np, bool objective) {
  for (auto& c : np.children) {
    if (c.is_preterminal()) {
      if (c.label == "PRP") c.word = objective ? to_objective_case(*c.word) : to_subjective_case(*c.word);
    } else if (c.category() == "NP") {
      shift_case(c, objective);
    }
  }
}

std::optional<Tense> tense_of_tag(std::string_view tag) {
  if (tag == "VBD") return Tense::Past;
  if (tag == "VBZ" || tag == "VBP") return Tense::Present;
  return std::nullopt;
}

std::string finite_tag(Tense t, Agreement agr) {
  if (t == Tense::Past) return "VBD";
  return agr == Agreement::ThirdSingular ? "VBZ" : "VBP";
}

ParseTree finite_leaf(std::string_view lemma, Tense t, Agreement agr, const Morphology& morph) {
  return ParseTree::leaf(finite_tag(t, agr), morph.finite_verb(lemma, t, agr));
}

std::optional<Tense> tense_of_finite(const ParseTree& leaf, const Morphology& morph) {
  if (leaf.label == "MD") {
    if (lemma_of(leaf, morph) == "will") return Tense::Future;
    return std::nullopt;
  }
  return tense_of_tag(leaf.label);
}

std::optional<std::size_t> negation_after(const ParseTree& vp, std::size_t head) {
  for (std::size_t j = head + 1; j < vp.children.size(); ++j) {
    if (is_negation(vp.children[j])) return j;
    if (vp.children[j].category() == "VP") break;
  }
  return std::nullopt;
}

void base_to_finite(ParseTree& vp, Tense target, Agreement agr, const Morphology& morph) {
  auto h = head_verb_index(vp);
  if (!h) {
    if (!is_coordinated_vp(vp)) inapplicable("verb phrase without a head verb");
    for (auto& c : vp.children) {
      if (c.category() == "VP") base_to_finite(c, target, agr, morph);
    }
    return;
  }
  ParseTree& head = vp.children[*h];
  if (head.label != "VB") inapplicable("future auxiliary not followed by a base verb");
  head = finite_leaf(lemma_of(head, morph), target, agr, morph);
}

void retense_vp(ParseTree& vp, Tense target, Agreement agr, const Morphology& morph) {
  auto h = head_verb_index(vp);
  if (!h) {
    if (!is_coordinated_vp(vp)) inapplicable("verb phrase without a head verb");
    for (auto& c : vp.children) {
      if (c.category() == "VP") retense_vp(c, target, agr, morph);
    }
    return;
  }
  const ParseTree head = vp.children[*h];
  auto current = tense_of_finite(head, morph);
  if (!current) inapplicable(head.label == "MD" ? "modal finite verb" : "no finite verb");
  if (*current == target) return;

  std::string lemma = lemma_of(head, morph);
  auto neg = negation_after(vp, *h);
  auto comp = child_after(vp, *h, "VP");
  bool clitic = neg && *vp.children[*neg].word == "n't";
  const auto& kids = vp.children;

  if (target == Tense::Future) {
    ParseTree will = ParseTree::leaf("MD", clitic ? "wo" : "will");
    if (lemma == "do" && comp) {
      vp.children[*h] = will;  // do-support: the complement is already a base form
      return;
    }
    std::vector<ParseTree> out(kids.begin(), kids.begin() + static_cast<std::ptrdiff_t>(*h));
    out.push_back(will);
    if (neg) out.push_back(kids[*neg]);
    std::vector<ParseTree> inner{ParseTree::leaf("VB", morph.inflect_verb(lemma, VerbForm::Base))};
    for (std::size_t j = *h + 1; j < kids.size(); ++j) {
      if (neg && j == *neg) continue;
      inner.push_back(kids[j]);
    }
    out.push_back(ParseTree::node("VP", std::move(inner)));
    vp.children = std::move(out);
    return;
  }

  if (*current == Tense::Future) {
    if (!comp) inapplicable("future auxiliary without a verb phrase");
    std::vector<ParseTree> out(kids.begin(), kids.begin() + static_cast<std::ptrdiff_t>(*h));
    std::vector<ParseTree> mids;
    for (std::size_t j = *h + 1; j < *comp; ++j) {
      if (!(neg && j == *neg)) mids.push_back(kids[j]);
    }
    ParseTree inner = kids[*comp];
    std::vector<ParseTree> post(kids.begin() + static_cast<std::ptrdiff_t>(*comp) + 1, kids.end());
    auto append = [&out](const std::vector<ParseTree>& v) { out.insert(out.end(), v.begin(), v.end()); };
    auto ih = head_verb_index(inner);
    std::string inner_lemma = ih ? lemma_of(inner.children[*ih], morph) : std::string();
    if (ih && inner.children[*ih].label != "VB")
      inapplicable("future auxiliary not followed by a base verb");

    if (neg && !is_be_or_have(inner_lemma)) {
      out.push_back(finite_leaf("do", target, agr, morph));
      out.push_back(kids[*neg]);
      append(mids);
      out.push_back(inner);
    } else if (!ih) {
      base_to_finite(inner, target, agr, morph);
      append(mids);
      out.push_back(inner);
    } else {
      std::vector<ParseTree> inner_pre(inner.children.begin(), inner.children.begin() + static_cast<std::ptrdiff_t>(*ih));
      std::vector<ParseTree> inner_post(inner.children.begin() + static_cast<std::ptrdiff_t>(*ih) + 1,
                                        inner.children.end());
      ParseTree fin = finite_leaf(inner_lemma, target, agr, morph);
      if (is_be_or_have(inner_lemma)) {
        out.push_back(fin);
        if (neg) out.push_back(kids[*neg]);
        append(mids);
        append(inner_pre);
      } else {
        append(mids);
        append(inner_pre);
        out.push_back(fin);
      }
      append(inner_post);
    }
    append(post);
    vp.children = std::move(out);
    return;
  }

  vp.children[*h] = finite_leaf(lemma, target, agr, morph);
}

}  // namespace

ClauseAnalysis analyze_clause(const ParseTree& tree, const Morphology& morph) {
  if (tree.is_preterminal() || tree.category() != "S") inapplicable("root is not a clause");
  auto slots = clause_slots(tree, {});
  if (!slots) inapplicable("no clause with a subject and a verb phrase");
  Spine spine = build_spine(tree, slots->vp, morph);
  if (spine.coordinated || spine.verbs.size() != spine.vps.size())
    inapplicable("coordinated verb phrases");
  if (spine.verbs.empty()) inapplicable("verb phrase without a head verb");

  ClauseAnalysis ca;
  ca.clause = slots->clause;
  ca.subject = slots->subject;
  ca.chain = spine.vps;
  ca.verbs = spine.verbs;

  const ParseTree& finite = node_at(tree, ca.verbs.front());
  ca.finite_is_modal = finite.label == "MD";
  ca.finite_form = verb_form_of_tag(finite.label).value_or(VerbForm::Base);

  const ParseTree& top = node_at(tree, ca.chain.front());
  if (auto neg = negation_after(top, ca.verbs.front().back())) ca.negation = child_path(ca.chain.front(), *neg);

  const ParseTree& main_vp = node_at(tree, ca.chain.back());
  std::size_t i = ca.verbs.back().back() + 1;
  while (i < main_vp.children.size() && main_vp.children[i].category() == "PRT") ++i;
  if (i < main_vp.children.size()) {
    const ParseTree& c = main_vp.children[i];
    if (!c.is_preterminal() && c.category() == "NP" && !is_adverbial_np(c)) {
      ca.object = child_path(ca.chain.back(), i);
      ++i;
    }
  }
  if (!ca.object) i = ca.verbs.back().back() + 1;
  for (; i < main_vp.children.size(); ++i) ca.trailing_modifiers.push_back(child_path(ca.chain.back(), i));
  return ca;
}

ParseTree to_tense(const ParseTree& tree, Tense target, const Morphology& morph) {
  ParseTree out = tree;
  for (const auto& c : root_clauses(tree)) {
    Agreement agr = subject_agreement(node_at(out, c.subject));
    retense_vp(node_at(out, c.vp), target, agr, morph);
  }
  return out;
}

ParseTree active_to_passive(const ParseTree& tree, const Morphology& morph) {
  ClauseAnalysis ca = analyze_clause(tree, morph);
  const std::size_t k = ca.verbs.size() - 1;
  const ParseTree& main = node_at(tree, ca.verbs[k]);
  std::string main_lemma = lemma_of(main, morph);
  if (main.label == "MD") inapplicable("no main verb");
  if (is_be_or_have(main_lemma)) inapplicable("main verb is be/have");
  for (std::size_t i = 0; i < k; ++i) {
    if (lemma_of(node_at(tree, ca.verbs[i]), morph) == "be" && node_at(tree, ca.verbs[i + 1]).label == "VBN")
      inapplicable("clause is already passive");
  }
  if (!ca.object) inapplicable("no direct object");
  const ParseTree& subject = node_at(tree, ca.subject);
  for (const auto& c : subject.children) {
    if (c.is_preterminal() && c.label == "EX") inapplicable("expletive subject");
  }
  for (const auto& c : node_at(tree, *ca.object).children) {
    if (c.is_preterminal() && c.label == "PRP" && (detail::ends_with(*c.word, "self") || detail::ends_with(*c.word, "selves")))
      inapplicable("reflexive object");
  }

  ParseTree out = tree;
  ParseTree object = node_at(out, *ca.object);
  ParseTree agent = node_at(out, ca.subject);
  const std::string subject_label = agent.label;
  shift_case(object, false);
  shift_case(agent, true);
  agent.label = "NP";
  object.label = subject_label;
  Agreement agr = subject_agreement(object);

  ParseTree& main_vp = node_at(out, ca.chain.back());
  const std::size_t mi = ca.verbs[k].back();
  const std::size_t oi = ca.object->back();
  std::vector<ParseTree> participle{ParseTree::leaf("VBN", morph.inflect_verb(main_lemma, VerbForm::PastParticiple))};
  for (std::size_t j = mi + 1; j < oi; ++j) participle.push_back(main_vp.children[j]);
  participle.push_back(ParseTree::node("PP", {ParseTree::leaf("IN", "by"), agent}));
  for (std::size_t j = oi + 1; j < main_vp.children.size(); ++j) participle.push_back(main_vp.children[j]);
  std::vector<ParseTree> pre(main_vp.children.begin(), main_vp.children.begin() + static_cast<std::ptrdiff_t>(mi));

  if (k == 0) {
    auto tense = tense_of_tag(main.label);
    if (!tense) inapplicable("no finite verb");
    pre.push_back(finite_leaf("be", *tense, agr, morph));
    pre.push_back(ParseTree::node("VP", std::move(participle)));
    main_vp.children = std::move(pre);
  } else {
    const ParseTree prev = node_at(out, ca.verbs[k - 1]);
    std::string prev_lemma = lemma_of(prev, morph);
    bool do_support = prev_lemma == "do" && k == 1 && prev.label != "MD";
    std::optional<ParseTree> be;
    if (prev.label == "MD" || prev.label == "TO") be = ParseTree::leaf("VB", "be");
    else if (prev_lemma == "have") be = ParseTree::leaf("VBN", "been");
    else if (prev_lemma == "be" && main.label == "VBG") be = ParseTree::leaf("VBG", "being");
    else if (!do_support) inapplicable("unsupported auxiliary sequence");

    if (do_support) {
      auto tense = tense_of_tag(prev.label);
      if (!tense) inapplicable("no finite verb");
      pre.insert(pre.end(), participle.begin(), participle.end());
      main_vp.children = std::move(pre);
      node_at(out, ca.verbs[0]) = finite_leaf("be", *tense, agr, morph);
    } else {
      pre.push_back(*be);
      pre.push_back(ParseTree::node("VP", std::move(participle)));
      main_vp.children = std::move(pre);
      ParseTree& fin = node_at(out, ca.verbs[0]);
      auto tense = tense_of_tag(fin.label);
      std::string fin_lemma = lemma_of(fin, morph);
      if (tense && is_be_or_have(fin_lemma)) fin = finite_leaf(fin_lemma, *tense, agr, morph);
    }
  }
  node_at(out, ca.subject) = std::move(object);
  return out;
}

ParseTree passive_to_active(const ParseTree& tree, const Morphology& morph) {
  ClauseAnalysis ca = analyze_clause(tree, morph);
  const std::size_t k = ca.verbs.size() - 1;
  if (k < 1) inapplicable("no passive auxiliary");
  const ParseTree& main = node_at(tree, ca.verbs[k]);
  const std::size_t b = k - 1;
  const ParseTree& be = node_at(tree, ca.verbs[b]);
  if (main.label != "VBN" || lemma_of(be, morph) != "be") inapplicable("not a be + participle passive");
  std::string main_lemma = lemma_of(main, morph);
  if (main_lemma == "be") inapplicable("not a be + participle passive");

  const ParseTree& mvp = node_at(tree, ca.chain[k]);
  const std::size_t mi = ca.verbs[k].back();
  std::optional<std::size_t> by;
  std::optional<std::size_t> by_np;
  for (std::size_t j = mi + 1; j < mvp.children.size() && !by; ++j) {
    const ParseTree& c = mvp.children[j];
    if (c.category() != "PP" || c.children.empty()) continue;
    const ParseTree& p = c.children.front();
    if (!p.is_preterminal() || detail::to_lower(*p.word) != "by") continue;
    for (std::size_t n = 1; n < c.children.size(); ++n) {
      if (c.children[n].category() == "NP") {
        by = j;
        by_np = n;
        break;
      }
    }
  }
  if (!by) fail(ErrorCode::MissingAgent, "passive clause without a by-phrase");

  ParseTree out = tree;
  ParseTree agent = mvp.children[*by].children[*by_np];
  ParseTree object = node_at(out, ca.subject);
  const std::string subject_label = object.label;
  shift_case(agent, false);
  shift_case(object, true);
  agent.label = subject_label;
  object.label = "NP";
  Agreement agr = subject_agreement(agent);

  std::vector<ParseTree> mvp_pre(mvp.children.begin(), mvp.children.begin() + static_cast<std::ptrdiff_t>(mi));
  std::size_t j = mi + 1;
  std::vector<ParseTree> particles;
  while (j < mvp.children.size() && mvp.children[j].category() == "PRT") particles.push_back(mvp.children[j++]);
  std::vector<ParseTree> rest;
  for (; j < mvp.children.size(); ++j) {
    if (j != *by) rest.push_back(mvp.children[j]);
  }
  auto tail = [&](ParseTree verb) {
    std::vector<ParseTree> v{std::move(verb)};
    v.insert(v.end(), particles.begin(), particles.end());
    v.push_back(object);
    v.insert(v.end(), rest.begin(), rest.end());
    return v;
  };

  if (b == 0) {
    auto tense = tense_of_tag(be.label);
    if (!tense) inapplicable("no finite verb");
    ParseTree& top = node_at(out, ca.chain[0]);
    const std::size_t bi = ca.verbs[0].back();
    const std::size_t ci = ca.chain[1].back();
    if (ca.negation) {
      std::vector<ParseTree> inner = mvp_pre;
      auto t = tail(ParseTree::leaf("VB", main_lemma));
      inner.insert(inner.end(), t.begin(), t.end());
      top.children[bi] = finite_leaf("do", *tense, agr, morph);
      top.children[ci] = ParseTree::node("VP", std::move(inner));
    } else {
      std::vector<ParseTree> kids(top.children.begin(), top.children.begin() + static_cast<std::ptrdiff_t>(bi));
      for (std::size_t n = bi + 1; n < ci; ++n) kids.push_back(top.children[n]);
      kids.insert(kids.end(), mvp_pre.begin(), mvp_pre.end());
      auto t = tail(finite_leaf(main_lemma, *tense, agr, morph));
      kids.insert(kids.end(), t.begin(), t.end());
      for (std::size_t n = ci + 1; n < top.children.size(); ++n) kids.push_back(top.children[n]);
      top.children = std::move(kids);
    }
  } else {
    auto form = verb_form_of_tag(be.label);
    if (!form || (*form != VerbForm::Base && *form != VerbForm::PastParticiple && *form != VerbForm::Gerund))
      inapplicable("unsupported auxiliary sequence");
    ParseTree& bvp = node_at(out, ca.chain[b]);
    const std::size_t bi = ca.verbs[b].back();
    const std::size_t ci = ca.chain[k].back();
    std::vector<ParseTree> kids(bvp.children.begin(), bvp.children.begin() + static_cast<std::ptrdiff_t>(bi));
    for (std::size_t n = bi + 1; n < ci; ++n) kids.push_back(bvp.children[n]);
    kids.insert(kids.end(), mvp_pre.begin(), mvp_pre.end());
    auto t = tail(ParseTree::leaf(std::string(tag_of_verb_form(*form)), morph.inflect_verb(main_lemma, *form)));
    kids.insert(kids.end(), t.begin(), t.end());
    for (std::size_t n = ci + 1; n < bvp.children.size(); ++n) kids.push_back(bvp.children[n]);
    bvp.children = std::move(kids);
    ParseTree& fin = node_at(out, ca.verbs[0]);
    auto tense = tense_of_tag(fin.label);
    std::string fin_lemma = lemma_of(fin, morph);
    if (tense && is_be_or_have(fin_lemma)) fin = finite_leaf(fin_lemma, *tense, agr, morph);
  }
  node_at(out, ca.subject) = std::move(agent);
  return out;
}

ParseTree move_pp(const ParseTree& tree, PpDirection direction) {
  if (tree.is_preterminal() || tree.category() != "S") inapplicable("root is not a clause");
  if (tree.children.size() < 2) inapplicable("clause has a single constituent");
  ParseTree out = tree;
  auto& kids = out.children;
  if (direction == PpDirection::FrontToBack) {
    if (kids.front().category() != "PP") inapplicable("clause does not start with a PP");
    std::rotate(kids.begin(), kids.begin() + 1, kids.end());
    return out;
  }
  if (kids.back().category() == "PP") {
    std::rotate(kids.begin(), kids.end() - 1, kids.end());
    return out;
  }
  ParseTree* cur = &kids.back();
  while (cur->category() == "VP" && cur->children.size() >= 2) {
    ParseTree& last = cur->children.back();
    if (last.category() == "PP") {
      ParseTree pp = std::move(last);
      cur->children.pop_back();
      kids.insert(kids.begin(), std::move(pp));
      return out;
    }
    cur = &last;
  }
  inapplicable("clause does not end with a PP");
}

}  // namespace finestyle
