#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "finestyle/error.hpp"
#include "finestyle/lexicon.hpp"
#include "wordnet_fixture.hpp"

using namespace finestyle;

namespace {

Lexicon lex_of(const std::string& text) {
  std::istringstream in(text);
  return parse_lexicon(in, "test.tsv");
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Io;
}

std::filesystem::path temp_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("finestyle_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("native lexicon loading") {
  auto lex = lex_of("# comment\nshift\tnoun\tSYN\tdisplacement\n");
  CHECK(lex.synonyms("shift", PosClass::Noun) == std::vector<std::string>{"displacement"});
  CHECK(lex.synonyms("shift", PosClass::Verb).empty());

  auto ant = lex_of("confidence\tnoun\tANT\tdiffidence\n");
  CHECK(ant.antonyms("confidence", PosClass::Noun) == std::vector<std::string>{"diffidence"});
  CHECK(ant.antonyms("diffidence", PosClass::Noun) == std::vector<std::string>{"confidence"});

  CHECK(lex_of("").empty());
  CHECK(lex_of("\n# only comments\n").empty());
}

TEST_CASE("native lexicon invariants and errors") {
  auto lex = lex_of(
      "estimate\tnoun\tSYN\testimate\n"
      "estimate\tnoun\tSYN\tjudge\n"
      "estimate\tnoun\tSYN\tcalculation\n");
  CHECK(lex.synonyms("estimate", PosClass::Noun) == std::vector<std::string>{"judge", "calculation"});
  CHECK(code_of([] { lex_of("estimate\tnoun\tSYN\tjudge\nEstimate\tnoun\tSYN\tJudge\n"); }) ==
        ErrorCode::DuplicateKey);

  CHECK(code_of([] { lex_of("shift\tnoun\tdisplacement\n"); }) == ErrorCode::MalformedLine);
  CHECK(code_of([] { lex_of("shift noun SYN displacement\n"); }) == ErrorCode::MalformedLine);
  CHECK(code_of([] { lex_of("shift\tadverb\tSYN\tx\n"); }) == ErrorCode::MalformedLine);
  CHECK(code_of([] { lex_of("shift\tnoun\tHYP\tx\n"); }) == ErrorCode::MalformedLine);
  CHECK(code_of([] { lex_of("a\tnoun\tSYN\tb\na\tnoun\tSYN\tb\n"); }) == ErrorCode::DuplicateKey);
  try {
    lex_of("a\tnoun\tSYN\tb\n\nbad\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("test.tsv:3") != std::string::npos);
  }
  CHECK(code_of([] { load_lexicon("/nonexistent/lexicon.tsv"); }) == ErrorCode::MissingFile);
}

TEST_CASE("frequency tables") {
  auto f = build_frequency(std::vector<Sentence>{sentence_from_text("the cat saw the cat")});
  CHECK(f["cat"] == 2);
  CHECK(f["the"] == 2);
  CHECK(f["saw"] == 1);
  CHECK(build_frequency(std::vector<Sentence>{}).empty());

  auto tree = parse_bracketed(
      "(S (NP (DT the) (NNS estimates)) (VP (VBD were) (ADJP (JJ unreliable))))");
  auto g = build_frequency(std::vector<ParseTree>{tree, tree}, Morphology::english());
  CHECK(g["estimate"] == 2);
  CHECK(g["be"] == 2);
  CHECK(g["the"] == 2);
  CHECK(g.count("estimates") == 0);

  std::istringstream in("# lemma\tcount\njudge\t40\nestimate\t7\n");
  auto t = parse_frequency(in, "f");
  CHECK(t.at("judge") == 40);
  std::istringstream dup("a\t1\na\t2\n");
  CHECK(code_of([&] { parse_frequency(dup, "f"); }) == ErrorCode::DuplicateKey);
  std::istringstream neg("a\t-1\n");
  CHECK(code_of([&] { parse_frequency(neg, "f"); }) == ErrorCode::MalformedLine);
  std::ostringstream out;
  write_frequency(t, out);
  std::istringstream back(out.str());
  CHECK(parse_frequency(back, "f") == t);
}

TEST_CASE("rank_synonyms") {
  auto lex = lex_of(
      "estimate\tnoun\tSYN\tcalculation\n"
      "estimate\tnoun\tSYN\tjudge\n"
      "estimate\tnoun\tSYN\tappraisal\n");
  lex.set_frequencies({{"judge", 40}, {"calculation", 3}, {"estimate", 100}});
  CHECK(rank_synonyms(lex, "estimate", PosClass::Noun, FrequencyMode::MostFrequent) == "judge");
  CHECK(rank_synonyms(lex, "estimate", PosClass::Noun, FrequencyMode::LeastFrequent) == "appraisal");

  lex.set_frequencies({});
  CHECK(rank_synonyms(lex, "estimate", PosClass::Noun, FrequencyMode::MostFrequent) == "appraisal");
  CHECK(rank_synonyms(lex, "estimate", PosClass::Noun, FrequencyMode::LeastFrequent) == "appraisal");
  CHECK(code_of([&] { rank_synonyms(lex, "dog", PosClass::Noun, FrequencyMode::MostFrequent); }) ==
        ErrorCode::NoSynonyms);
}

TEST_CASE("wordnet import") {
  auto dir = temp_dir("wordnet");
  wnfix::write_fixture(dir);
  Lexicon lex = import_wordnet(dir.string());

  CHECK(lex.synonyms("shift", PosClass::Noun) ==
        std::vector<std::string>{"displacement", "work-shift", "duty-period"});
  CHECK(lex.synonyms("displacement", PosClass::Noun) == std::vector<std::string>{"shift"});
  CHECK(lex.synonyms("underwriter", PosClass::Noun) == std::vector<std::string>{"investment-banker"});
  CHECK(lex.antonyms("confidence", PosClass::Noun) == std::vector<std::string>{"diffidence"});
  CHECK(lex.antonyms("diffidence", PosClass::Noun) == std::vector<std::string>{"confidence"});
  CHECK(lex.antonyms("assurance", PosClass::Noun).empty());
  CHECK(lex.antonyms("shift", PosClass::Noun).empty());
  CHECK(lex.antonyms("original", PosClass::Adjective) == std::vector<std::string>{"unoriginal"});
  CHECK(lex.antonyms("unoriginal", PosClass::Adjective) == std::vector<std::string>{"original"});
  CHECK(lex.synonyms("similar", PosClass::Adjective) == std::vector<std::string>{"alike"});
  CHECK(lex.antonyms("note", PosClass::Verb) == std::vector<std::string>{"ignore"});
  CHECK(lex.synonyms("expect", PosClass::Verb) == std::vector<std::string>{"anticipate"});
  CHECK(lex.synonyms("lilly", PosClass::Noun) == std::vector<std::string>{"eli-lilly"});

  // import then write/load is the identity on the lexicon value
  std::ostringstream out;
  write_lexicon(lex, out);
  std::istringstream in(out.str());
  CHECK(parse_lexicon(in, "roundtrip") == lex);
}

TEST_CASE("wordnet import errors") {
  auto dir = temp_dir("wordnet_bad");
  wnfix::write_fixture(dir);
  std::filesystem::remove(dir / "data.verb");
  CHECK(code_of([&] { import_wordnet(dir.string()); }) == ErrorCode::MissingFile);
  CHECK(code_of([] { import_wordnet("/nonexistent/dict"); }) == ErrorCode::MissingFile);

  wnfix::write_fixture(dir);
  {
    // point the first index entry at an offset in the middle of a record
    std::ifstream in(dir / "index.noun");
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    auto at = text.find("confidence n 1 1 @ 1 0 ");
    REQUIRE(at != std::string::npos);
    std::size_t off_pos = at + std::string("confidence n 1 1 @ 1 0 ").size();
    std::string original = text.substr(off_pos, 8);
    std::size_t bogus = std::stoul(original) + 3;
    text.replace(off_pos, 8, wnfix::offset8(bogus));
    std::ofstream(dir / "index.noun", std::ios::binary) << text;
    try {
      import_wordnet(dir.string());
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
      CHECK(std::string(e.what()).find("data.noun: byte " + std::to_string(bogus)) != std::string::npos);
    }
  }
  wnfix::write_fixture(dir);
  {
    std::ofstream(dir / "index.adj", std::ios::app) << "broken a 2 0 1 0 00000001\n";
    CHECK(code_of([&] { import_wordnet(dir.string()); }) == ErrorCode::ParseError);
  }
}

TEST_CASE("property: antonym symmetry and ranking membership on random lexicons") {
  std::mt19937_64 rng(21);
  const std::vector<std::string> words = {"a", "b", "c", "d", "e", "f", "g", "h"};
  for (int round = 0; round < 300; ++round) {
    std::string text;
    std::set<std::string> lines;
    int n = 1 + static_cast<int>(rng() % 20);
    for (int i = 0; i < n; ++i) {
      std::string line = words[rng() % words.size()] + "\tnoun\t" + (rng() % 2 ? "SYN" : "ANT") + "\t" +
                         words[rng() % words.size()] + "\n";
      if (lines.insert(line).second) text += line;
    }
    Lexicon lex = lex_of(text);
    FrequencyTable freq;
    for (const auto& w : words) freq[w] = rng() % 4;
    lex.set_frequencies(freq);
    for (const auto& a : words) {
      for (const auto& b : lex.antonyms(a, PosClass::Noun)) {
        const auto& back = lex.antonyms(b, PosClass::Noun);
        CHECK(std::find(back.begin(), back.end(), a) != back.end());
      }
      const auto& syn = lex.synonyms(a, PosClass::Noun);
      CHECK(std::find(syn.begin(), syn.end(), a) == syn.end());
      CHECK(std::set<std::string>(syn.begin(), syn.end()).size() == syn.size());
      if (syn.empty()) continue;
      for (auto mode : {FrequencyMode::MostFrequent, FrequencyMode::LeastFrequent}) {
        std::string r = rank_synonyms(lex, a, PosClass::Noun, mode);
        CHECK(r != a);
        CHECK(std::find(syn.begin(), syn.end(), r) != syn.end());
        for (const auto& s : syn) {
          if (mode == FrequencyMode::MostFrequent) CHECK(lex.frequency(s) <= lex.frequency(r));
          else CHECK(lex.frequency(s) >= lex.frequency(r));
        }
      }
    }
    std::ostringstream out;
    write_lexicon(lex, out);
    std::istringstream in(out.str());
    Lexicon back = parse_lexicon(in, "rt");
    back.set_frequencies(freq);
    CHECK(back == lex);
  }
}

TEST_CASE("property: frequency is invariant under corpus reordering") {
  std::mt19937_64 rng(22);
  std::vector<Sentence> corpus;
  for (int i = 0; i < 50; ++i) {
    Sentence s;
    for (int k = 0; k < 6; ++k) s.tokens.push_back(std::string(1, static_cast<char>('a' + rng() % 6)));
    corpus.push_back(s);
  }
  auto base = build_frequency(corpus);
  for (int r = 0; r < 20; ++r) {
    std::shuffle(corpus.begin(), corpus.end(), rng);
    CHECK(build_frequency(corpus) == base);
  }
}
