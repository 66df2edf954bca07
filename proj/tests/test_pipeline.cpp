#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "finestyle/error.hpp"
#include "finestyle/pipeline.hpp"
#include "golden.hpp"

using namespace finestyle;

namespace {

const char* kThree =
    "( (S (NP-SBJ (PRP He)) (VP (VBD sold) (NP (NNS shares))) (. .)) )\n"
    "( (S (NP-SBJ (PRP She)) (VP (MD can) (VP (VB swim))) (. .)) )\n"
    "( (S (NP-SBJ (DT The) (NN fund)) (VP (VBZ owns) (NP (NNS bonds))) (. .)) )\n";

}  // namespace

TEST_CASE("parallel map keeps order and surfaces errors") {
  std::function<int(std::size_t)> sq = [](std::size_t i) { return static_cast<int>(i * i); };
  for (unsigned t : {1u, 2u, 8u}) {
    auto out = parallel_map(1000, t, sq);
    REQUIRE(out.size() == 1000);
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i * i));
  }
  std::function<int(std::size_t)> boom = [](std::size_t i) -> int {
    if (i == 37) throw std::runtime_error("boom");
    return 0;
  };
  CHECK_THROWS_AS(parallel_map(100, 4, boom), std::runtime_error);
  CHECK(parallel_map(0, 4, sq).empty());
}

TEST_CASE("run transfer counts applicable sentences") {
  std::istringstream in(kThree);
  std::ostringstream pairs;
  auto s = run_transfer(in, "three.mrg", TransferId::ToFuture, TransferContext{}, {&pairs, nullptr, nullptr}, 2, 2);
  CHECK(s.applicable == 2);
  CHECK(s.inapplicable == 1);
  CHECK(pairs.str() ==
        "three.mrg:1\the sold shares\the will sell shares\n"
        "three.mrg:3\tthe fund owns bonds\tthe fund will own bonds\n");
  CHECK_THROWS_AS(transfer_by_name("to-subjunctive"), Error);
}

TEST_CASE("logs are written for lexical and deletion transfers") {
  std::istringstream in("(S (NP (DT The) (JJ big) (NN shift)) (VP (VBD ended) (ADVP (RB quickly))))\n");
  std::ostringstream pairs, dels;
  run_transfer(in, "x", TransferId::AdjAdvRemoval, TransferContext{}, {&pairs, nullptr, &dels}, 1);
  CHECK(dels.str() == "x:1\t1\t2\tJJ\nx:1\t4\t5\tRB\n");

  std::istringstream lin("(S (NP (DT The) (NN shift)) (VP (VBD ended)))\n");
  std::istringstream lex_text("shift\tnoun\tSYN\tdisplacement\n");
  Lexicon lex = parse_lexicon(lex_text, "lex");
  TransferContext ctx;
  ctx.lexicon = &lex;
  std::ostringstream reps;
  run_transfer(lin, "y", TransferId::NounSynonym, ctx, {nullptr, &reps, nullptr}, 1);
  CHECK(reps.str() == "y:1\t1\tshift\tdisplacement\tsynonym\n");
}

TEST_CASE("golden rows through the batch driver") {
  for (const auto& row : golden::load_table1(FINESTYLE_TEST_DATA "/table1.json")) {
    TransferContext ctx;
    ctx.lexicon = &row.lexicon;
    auto records = transfer_batch({{"row", row.tree}}, transfer_by_name(row.transfer), ctx, 1);
    REQUIRE(records.size() == 1);
    REQUIRE(records[0].outcome);
    CHECK(records[0].outcome->sentence.text() == row.expected);
  }
}

TEST_CASE("run compose") {
  auto dims = dimensions_by_name({"tense", "voice"});
  std::istringstream empty("");
  std::ostringstream none;
  auto e = run_compose(empty, "empty", dims, TransferContext{}, {}, none, 2);
  CHECK(e.sentences == 0);
  CHECK(none.str().empty());

  std::istringstream in(kThree);
  std::ostringstream out;
  auto s = run_compose(in, "three", dims, TransferContext{}, {}, out, 3, 1);
  CHECK(s.sentences == 3);
  CHECK(s.skipped == 1);
  std::istringstream lines(out.str());
  std::string line;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    auto p = parse_pair_line(line, "out");
    auto label = parse_label(p.label.text(), dims);
    CHECK(label.text() == p.label.text());
    CHECK(format_pair(p) == line);
    ++n;
  }
  CHECK(n == s.pairs);

  // Same output regardless of thread count.
  std::istringstream again(kThree);
  std::ostringstream one_thread;
  run_compose(again, "three", dims, TransferContext{}, {}, one_thread, 1);
  CHECK(one_thread.str() == out.str());
}

TEST_CASE("pair lines") {
  auto p = parse_pair_line("2 1\tthe cat sat\tthe cat sits", "f:1");
  CHECK(p.label.text() == "2 1");
  CHECK(p.target.text() == "the cat sits");
  for (const char* bad : {"2 1\tonly two", "x\ta\tb", "\ta\tb", "1\ta\tb\tc"}) {
    try {
      parse_pair_line(bad, "f:9");
      FAIL("expected MalformedLine");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MalformedLine);
      CHECK(std::string(e.what()).find("f:9") != std::string::npos);
    }
  }
}

TEST_CASE("config hash and manifest") {
  CHECK(fnv1a64("") == 14695981039346656037ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  PipelineConfig a;
  a.seed = 5;
  a.dimensions = {"tense", "voice"};
  PipelineConfig b = a;
  b.threads = 16;
  CHECK(a.hash() == b.hash());
  CHECK(a.hash().size() == 16);
  b.seed = 6;
  CHECK(a.hash() != b.hash());

  auto dir = std::filesystem::temp_directory_path() / "finestyle_test_manifest";
  std::filesystem::remove_all(dir);
  write_manifest(dir, "compose", a);
  std::ifstream in(dir / "manifest.json");
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("\"config_hash\": \"" + a.hash() + "\"") != std::string::npos);
  CHECK(ss.str().find("\"version\": \"" + std::string(kToolVersion) + "\"") != std::string::npos);
}
