#include <doctest.h>

#include <algorithm>
#include <random>

#include "finestyle/error.hpp"
#include "finestyle/syntax.hpp"
#include "golden.hpp"
#include "tree_gen.hpp"

using namespace finestyle;

namespace {

ParseTree tree_of(const char* s) { return normalize_tree(parse_bracketed(s)); }
std::string text(const ParseTree& t) { return extract_sentence(t).text(); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Io;
}

const char* kPlanning =
    "(S (NP-SBJ (PRP It)) (VP (VBZ is) (ADVP (RB also)) (VP (VBG planning) (NP (NP (DT another) (NN night)) "
    "(PP (IN of) (NP (JJ original) (NN series)))))) (. .))";

}  // namespace

TEST_CASE("clause analysis") {
  auto t = tree_of("(S (NP-SBJ (DT The) (NN firm)) (VP (MD wo) (RB n't) (VP (VB disclose) (NP (DT the) (NNS terms)) "
                   "(PP (IN in) (NP (NN detail))))) (. .))");
  auto ca = analyze_clause(t);
  CHECK(text(node_at(t, ca.subject)) == "the firm");
  REQUIRE(ca.verbs.size() == 2);
  CHECK(*node_at(t, ca.verbs.front()).word == "wo");
  CHECK(*node_at(t, ca.verbs.back()).word == "disclose");
  CHECK(ca.finite_is_modal);
  REQUIRE(ca.negation);
  REQUIRE(ca.object);
  CHECK(text(node_at(t, *ca.object)) == "the terms");
  REQUIRE(ca.trailing_modifiers.size() == 1);
  CHECK(text(node_at(t, ca.trailing_modifiers[0])) == "in detail");

  CHECK(code_of([] { analyze_clause(tree_of("(NP (DT the) (NN dog))")); }) == ErrorCode::Inapplicable);
  CHECK(code_of([] { analyze_clause(tree_of("(S (VP (VB go) (ADVP (RB home))))")); }) == ErrorCode::Inapplicable);
}

TEST_CASE("tense examples") {
  auto t = tree_of(kPlanning);
  CHECK(text(to_tense(t, Tense::Future)) == "it will be also planning another night of original series");
  CHECK(text(to_tense(t, Tense::Past)) == "it was also planning another night of original series");
  CHECK(text(to_tense(tree_of("(S (NP-SBJ (NNP Sen.) (NNP Mitchell)) (VP (VBD urged) (NP (PRP them)) "
                              "(S (VP (TO to) (VP (VB desist))))) (. .))"),
                      Tense::Present)) == "sen. mitchell urges them to desist");

  auto perfect = tree_of("(S (NP-SBJ (DT The) (NN dollar)) (VP (VBZ has) (VP (VBN been) (ADJP (JJ strong)))))");
  CHECK(text(to_tense(perfect, Tense::Past)) == "the dollar had been strong");
  CHECK(text(to_tense(perfect, Tense::Future)) == "the dollar will have been strong");

  auto neg = tree_of("(S (NP-SBJ (PRP They)) (VP (VBD did) (RB n't) (VP (VB sell) (NP (NNS shares)))))");
  CHECK(text(to_tense(neg, Tense::Future)) == "they wo n't sell shares");
  CHECK(text(to_tense(neg, Tense::Present)) == "they do n't sell shares");

  auto fut = tree_of("(S (NP-SBJ (PRP She)) (VP (MD will) (VP (VB sell) (NP (NNS shares)))))");
  CHECK(text(to_tense(fut, Tense::Past)) == "she sold shares");
  CHECK(text(to_tense(fut, Tense::Present)) == "she sells shares");
  auto fut_be = tree_of("(S (NP-SBJ (PRP I)) (VP (MD will) (VP (VB be) (ADJP (JJ late)))))");
  CHECK(text(to_tense(fut_be, Tense::Present)) == "i am late");
  auto fut_neg = tree_of("(S (NP-SBJ (DT The) (NN firm)) (VP (MD wo) (RB n't) (VP (VB disclose) (NP (DT the) (NNS terms)))))");
  CHECK(text(to_tense(fut_neg, Tense::Past)) == "the firm did n't disclose the terms");

  auto modal = tree_of("(S (NP-SBJ (PRP He)) (VP (MD can) (VP (VB swim))))");
  CHECK(code_of([&] { to_tense(modal, Tense::Past); }) == ErrorCode::Inapplicable);
}

TEST_CASE("tense on coordinated predicates converts each conjunct") {
  auto t = tree_of("(S (NP-SBJ (PRP He)) (VP (VP (VBD bought) (NP (NNS shares))) (CC and) (VP (VBD sold) (NP (NNS bonds)))))");
  CHECK(text(to_tense(t, Tense::Present)) == "he buys shares and sells bonds");
  CHECK(text(to_tense(t, Tense::Future)) == "he will buy shares and will sell bonds");
}

TEST_CASE("voice examples") {
  auto a = tree_of("(S (NP-SBJ (PRP He)) (ADVP (RB also)) (VP (VBD received) (NP (JJ 20-year) (NNS sentences)) "
                   "(PP (IN for) (NP (NP (DT each)) (PP (IN of) (NP (NP (DT the) (CD 24) (NNS passengers)) "
                   "(VP (VBN injured))))))) (. .))");
  CHECK(text(active_to_passive(a)) ==
        "20-year sentences also were received by him for each of the 24 passengers injured");

  auto p = tree_of("(S (NP-SBJ (JJS Most) (NNS bills)) (VP (VBP are) (VP (VBN drafted) (PP (IN by) "
                   "(NP-LGS (NP (NNS bureaucrats)) (RB not) (NP (NNS politicians)))))) (. .))");
  CHECK(text(passive_to_active(p)) == "bureaucrats not politicians draft most bills");
  CHECK(text(active_to_passive(passive_to_active(p))) == "most bills are drafted by bureaucrats not politicians");

  CHECK(code_of([] { active_to_passive(tree_of("(S (NP-SBJ (PRP He)) (VP (VBZ sleeps)))")); }) == ErrorCode::Inapplicable);
  CHECK(code_of([] {
          passive_to_active(tree_of("(S (NP-SBJ (DT The) (NN window)) (VP (VBD was) (VP (VBN broken))))"));
        }) == ErrorCode::MissingAgent);
  CHECK(code_of([] { passive_to_active(tree_of("(S (NP-SBJ (PRP He)) (VP (VBD broke) (NP (PRP it))))")); }) ==
        ErrorCode::Inapplicable);
}

TEST_CASE("voice with auxiliaries") {
  auto modal = tree_of("(S (NP-SBJ (DT The) (NNS analysts)) (VP (MD will) (VP (VB review) (NP (DT the) (NNS results)))))");
  CHECK(text(active_to_passive(modal)) == "the results will be reviewed by the analysts");
  auto perfect = tree_of("(S (NP-SBJ (PRP She)) (VP (VBZ has) (VP (VBN signed) (NP (DT the) (NNS contracts)))))");
  CHECK(text(active_to_passive(perfect)) == "the contracts have been signed by her");
  auto prog = tree_of("(S (NP-SBJ (DT The) (NN bank)) (VP (VBZ is) (VP (VBG raising) (NP (PRP$ its) (NNS rates)))))");
  CHECK(text(active_to_passive(prog)) == "its rates are being raised by the bank");
  auto neg = tree_of("(S (NP-SBJ (PRP We)) (VP (VBD did) (RB n't) (VP (VB see) (NP (DT the) (NN report)))))");
  CHECK(text(active_to_passive(neg)) == "the report was n't seen by us");
}

TEST_CASE("voice round trip over the SVO suite") {
  auto suite = golden::load_normalized(FINESTYLE_TEST_DATA "/voice_suite.mrg");
  REQUIRE(suite.size() >= 20);
  for (const auto& t : suite) {
    CAPTURE(text(t));
    ParseTree passive = active_to_passive(t);
    CHECK(extract_sentence(passive).size() >= extract_sentence(t).size() + 1);
    CHECK(extract_sentence(passive).size() <= extract_sentence(t).size() + 2);
    CHECK(text(passive_to_active(passive)) == text(t));
  }
}

TEST_CASE("pp movement examples") {
  auto front = tree_of("(S (PP-LOC (IN In) (NP (NNP Indianapolis))) (, ,) (NP-SBJ (NNP Lilly)) (VP (VBD declined) (NP (NN comment))) (. .))");
  CHECK(text(move_pp(front, PpDirection::FrontToBack)) == "lilly declined comment in indianapolis");
  auto back = tree_of("(S (NP-SBJ (DT The) (NN dollar)) (VP (VBZ has) (VP (VBN been) (ADJP-PRD (JJ strong)) (PP (IN unlike) (NP (CD 1987))))) (. .))");
  CHECK(text(move_pp(back, PpDirection::BackToFront)) == "unlike 1987 the dollar has been strong");
  CHECK(code_of([&] { move_pp(back, PpDirection::FrontToBack); }) == ErrorCode::Inapplicable);
  CHECK(code_of([] { move_pp(tree_of("(S (NP (PRP he)) (VP (VBD left)))"), PpDirection::BackToFront); }) ==
        ErrorCode::Inapplicable);

  auto two = tree_of("(S (NP (PRP he)) (VP (VBD sold) (NP (NNS shares)) (PP (IN in) (NP (NNP may))) (PP (IN at) (NP (DT a) (NN loss)))))");
  CHECK(text(move_pp(two, PpDirection::BackToFront)) == "at a loss he sold shares in may");
}

TEST_CASE("pp movement is a rotation and its own inverse") {
  std::vector<ParseTree> trees;
  for (const auto& t : golden::load_normalized(FINESTYLE_TEST_DATA "/sample_corpus.mrg")) trees.push_back(t);
  for (const auto& t : golden::load_normalized(FINESTYLE_TEST_DATA "/voice_suite.mrg")) trees.push_back(t);
  std::size_t applied = 0;
  for (const auto& t : trees) {
    auto in = extract_sentence(t).tokens;
    for (auto dir : {PpDirection::FrontToBack, PpDirection::BackToFront}) {
      ParseTree moved;
      try {
        moved = move_pp(t, dir);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Inapplicable);
        continue;
      }
      ++applied;
      auto out = extract_sentence(moved).tokens;
      // Oracle: some rotation of the input equals the output.
      bool rotation = false;
      for (std::size_t k = 1; k < in.size() && !rotation; ++k) {
        auto r = in;
        std::rotate(r.begin(), r.begin() + k, r.end());
        rotation = r == out;
      }
      bool same_multiset = std::is_permutation(in.begin(), in.end(), out.begin(), out.end());
      CHECK(same_multiset);
      if (dir == PpDirection::FrontToBack) {
        CHECK(rotation);
        CHECK(extract_sentence(move_pp(moved, PpDirection::BackToFront)).tokens == in);
      }
    }
  }
  CHECK(applied >= 10);
}

TEST_CASE("tense idempotence over random clauses") {
  std::mt19937_64 rng(20260417);
  std::size_t applied = 0;
  for (int i = 0; i < 400; ++i) {
    ParseTree t = testgen::random_clause(rng);
    CAPTURE(serialize(t));
    for (auto target : {Tense::Past, Tense::Present, Tense::Future}) {
      ParseTree once;
      try {
        once = to_tense(t, target);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Inapplicable);
        continue;
      }
      ++applied;
      CHECK(to_tense(once, target) == once);
      auto a = extract_sentence(t).size();
      auto b = extract_sentence(once).size();
      CHECK(std::max(a, b) - std::min(a, b) <= 1);
    }
  }
  CHECK(applied >= 300);
}

TEST_CASE("generated clauses keep their own tense") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    ParseTree t = testgen::random_clause(rng);
    auto ca = analyze_clause(t);
    const ParseTree& fin = node_at(t, ca.verbs.front());
    Tense own = fin.label == "MD" ? Tense::Future : fin.label == "VBD" ? Tense::Past : Tense::Present;
    CAPTURE(serialize(t));
    CHECK(to_tense(t, own) == t);
  }
}
