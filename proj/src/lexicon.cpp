#include "finestyle/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "finestyle/error.hpp"
#include "text_util.hpp"

namespace finestyle {

std::string_view to_string(PosClass pos) {
  switch (pos) {
    case PosClass::Noun: return "noun";
    case PosClass::Verb: return "verb";
    case PosClass::Adjective: return "adj";
  }
  return "noun";
}

std::optional<PosClass> pos_class_from_string(std::string_view s) {
  if (s == "noun") return PosClass::Noun;
  if (s == "verb") return PosClass::Verb;
  if (s == "adj") return PosClass::Adjective;
  return std::nullopt;
}

std::optional<PosClass> pos_class_of_tag(std::string_view tag) {
  if (tag == "NN" || tag == "NNS") return PosClass::Noun;
  if (tag != "MD" && is_verb_tag(tag)) return PosClass::Verb;
  if (is_adjective_tag(tag)) return PosClass::Adjective;
  return std::nullopt;
}

std::string_view to_string(Relation rel) { return rel == Relation::Synonym ? "SYN" : "ANT"; }

bool Lexicon::add(std::string_view lemma, PosClass pos, Relation rel, std::string_view target) {
  if (lemma == target || lemma.empty() || target.empty()) return false;
  Lists& lists = entries_[Key{std::string(lemma), pos}];
  auto& v = rel == Relation::Synonym ? lists.synonyms : lists.antonyms;
  if (std::find(v.begin(), v.end(), target) != v.end()) return false;
  v.emplace_back(target);
  return true;
}

void Lexicon::close_antonyms() {
  std::vector<std::pair<Key, std::string>> missing;
  for (const auto& [key, lists] : entries_) {
    for (const auto& b : lists.antonyms) {
      const auto& back = antonyms(b, key.second);
      if (std::find(back.begin(), back.end(), key.first) == back.end())
        missing.emplace_back(Key{b, key.second}, key.first);
    }
  }
  for (const auto& [key, a] : missing) add(key.first, key.second, Relation::Antonym, a);
}

const std::vector<std::string>& Lexicon::related(std::string_view lemma, PosClass pos,
                                                 Relation rel) const {
  static const std::vector<std::string> kEmpty;
  auto it = entries_.find(Key{std::string(lemma), pos});
  if (it == entries_.end()) return kEmpty;
  return rel == Relation::Synonym ? it->second.synonyms : it->second.antonyms;
}

std::uint64_t Lexicon::frequency(std::string_view lemma) const {
  auto it = frequency_.find(lemma);
  return it == frequency_.end() ? 0 : it->second;
}

std::vector<Lexicon::Record> Lexicon::records() const {
  std::vector<Record> out;
  for (const auto& [key, lists] : entries_) {
    for (const auto& s : lists.synonyms) out.push_back({key.first, key.second, Relation::Synonym, s});
    for (const auto& a : lists.antonyms) out.push_back({key.first, key.second, Relation::Antonym, a});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Native TSV

namespace {

std::string where(const std::string& source, std::size_t line) {
  return source + ":" + std::to_string(line);
}

}  // namespace

Lexicon parse_lexicon(std::istream& in, const std::string& source_name) {
  Lexicon lex;
  std::set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view v = detail::trim_cr(line);
    if (v.empty() || v.front() == '#') continue;
    auto cols = detail::split(v, '\t');
    if (cols.size() != 4)
      fail(ErrorCode::MalformedLine, where(source_name, lineno) + ": expected 4 tab-separated columns, got " +
                                         std::to_string(cols.size()));
    auto pos = pos_class_from_string(cols[1]);
    if (!pos)
      fail(ErrorCode::MalformedLine, where(source_name, lineno) + ": unknown POS class '" + cols[1] + "'");
    Relation rel;
    if (cols[2] == "SYN") rel = Relation::Synonym;
    else if (cols[2] == "ANT") rel = Relation::Antonym;
    else fail(ErrorCode::MalformedLine, where(source_name, lineno) + ": unknown relation '" + cols[2] + "'");
    std::string lemma = detail::to_lower(cols[0]);
    std::string target = detail::to_lower(cols[3]);
    if (lemma.empty() || target.empty() || lemma.find(' ') != std::string::npos ||
        target.find(' ') != std::string::npos)
      fail(ErrorCode::MalformedLine, where(source_name, lineno) + ": empty or multi-token lemma");
    std::string key = lemma + '\t' + cols[1] + '\t' + cols[2] + '\t' + target;
    if (!seen.insert(key).second)
      fail(ErrorCode::DuplicateKey, where(source_name, lineno) + ": repeated record " + lemma + " " +
                                        cols[2] + " " + target);
    lex.add(lemma, *pos, rel, target);
  }
  lex.close_antonyms();
  return lex;
}

Lexicon load_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::MissingFile, path);
  return parse_lexicon(in, path);
}

void write_lexicon(const Lexicon& lexicon, std::ostream& out) {
  out << "# lemma\tpos\trelation\ttarget\n";
  for (const auto& r : lexicon.records()) {
    out << r.lemma << '\t' << to_string(r.pos) << '\t' << to_string(r.relation) << '\t' << r.target
        << '\n';
  }
}

FrequencyTable parse_frequency(std::istream& in, const std::string& source_name) {
  FrequencyTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view v = detail::trim_cr(line);
    if (v.empty() || v.front() == '#') continue;
    auto cols = detail::split(v, '\t');
    if (cols.size() != 2)
      fail(ErrorCode::MalformedLine, where(source_name, lineno) + ": expected 2 tab-separated columns");
    std::uint64_t count = 0;
    const std::string& c = cols[1];
    auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), count);
    if (ec != std::errc() || ptr != c.data() + c.size() || c.empty())
      fail(ErrorCode::MalformedLine, where(source_name, lineno) + ": bad count '" + c + "'");
    if (!table.emplace(detail::to_lower(cols[0]), count).second)
      fail(ErrorCode::DuplicateKey, where(source_name, lineno) + ": " + cols[0]);
  }
  return table;
}

FrequencyTable load_frequency(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::MissingFile, path);
  return parse_frequency(in, path);
}

void write_frequency(const FrequencyTable& table, std::ostream& out) {
  for (const auto& [lemma, count] : table) out << lemma << '\t' << count << '\n';
}

FrequencyTable build_frequency(const std::vector<Sentence>& corpus) {
  FrequencyTable table;
  for (const auto& s : corpus) {
    for (const auto& tok : s.tokens) ++table[detail::to_lower(tok)];
  }
  return table;
}

namespace {

void count_leaves(const ParseTree& t, const Morphology& morph, FrequencyTable& table) {
  if (t.is_preterminal()) {
    if (pos_class_of_tag(t.label)) ++table[morph.lemmatize(*t.word, t.label)];
    else ++table[detail::to_lower(*t.word)];
    return;
  }
  for (const auto& c : t.children) count_leaves(c, morph, table);
}

}  // namespace

FrequencyTable build_frequency(const std::vector<ParseTree>& corpus, const Morphology& morph) {
  FrequencyTable table;
  for (const auto& t : corpus) count_leaves(t, morph, table);
  return table;
}

std::string rank_synonyms(const Lexicon& lexicon, std::string_view lemma, PosClass pos,
                          FrequencyMode mode) {
  const auto& syns = lexicon.synonyms(lemma, pos);
  if (syns.empty())
    fail(ErrorCode::NoSynonyms, std::string(lemma) + " (" + std::string(to_string(pos)) + ")");
  const std::string* best = nullptr;
  std::uint64_t best_count = 0;
  for (const auto& s : syns) {
    std::uint64_t c = lexicon.frequency(s);
    bool better = false;
    if (!best) better = true;
    else if (c != best_count) better = mode == FrequencyMode::MostFrequent ? c > best_count : c < best_count;
    else better = s < *best;
    if (better) {
      best = &s;
      best_count = c;
    }
  }
  return *best;
}

// ---------------------------------------------------------------------------
// WordNet database files

namespace {

struct Synset {
  std::vector<std::string> words;
  // (source word number, target synset offset, target word number); 0 = whole synset
  struct Antonym {
    int source;
    std::size_t target_offset;
    int target;
  };
  std::vector<Antonym> antonyms;
};

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) fail(ErrorCode::MissingFile, p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string wordnet_lemma(std::string_view w) {
  auto paren = w.find('(');
  if (paren != std::string_view::npos) w = w.substr(0, paren);  // adjective markers "(a)" "(p)" "(ip)"
  std::string out = detail::to_lower(w);
  std::replace(out.begin(), out.end(), '_', '-');
  return out;
}

class DataFile {
 public:
  DataFile(std::string name, std::string text) : name_(std::move(name)), text_(std::move(text)) {}

  const Synset& at(std::size_t offset) {
    auto it = cache_.find(offset);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(offset, parse(offset)).first->second;
  }

 private:
  [[noreturn]] void bad(std::size_t offset, const std::string& what) const {
    fail(ErrorCode::ParseError, name_ + ": byte " + std::to_string(offset) + ": " + what);
  }

  Synset parse(std::size_t offset) const {
    if (offset >= text_.size()) bad(offset, "synset offset past end of file");
    if (offset > 0 && text_[offset - 1] != '\n') bad(offset, "offset is not at a line start");
    std::size_t end = text_.find('\n', offset);
    std::string_view line(text_.data() + offset, (end == std::string::npos ? text_.size() : end) - offset);
    auto bar = line.find(" | ");
    if (bar != std::string_view::npos) line = line.substr(0, bar);
    auto tok = detail::split_ws(line);
    std::size_t i = 0;
    auto need = [&](std::size_t n, const char* what) {
      if (i + n > tok.size()) bad(offset, std::string("truncated record: missing ") + what);
    };
    auto number = [&](const std::string& s, int base, const char* what) -> std::size_t {
      std::size_t v = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
      if (ec != std::errc() || p != s.data() + s.size()) bad(offset, std::string("bad ") + what + " '" + s + "'");
      return v;
    };
    need(4, "header");
    if (number(tok[0], 10, "synset offset") != offset) bad(offset, "record offset does not match its position");
    i = 3;
    std::size_t w_cnt = number(tok[i++], 16, "word count");
    Synset s;
    need(2 * w_cnt, "words");
    for (std::size_t k = 0; k < w_cnt; ++k) {
      s.words.push_back(wordnet_lemma(tok[i]));
      i += 2;
    }
    need(1, "pointer count");
    std::size_t p_cnt = number(tok[i++], 10, "pointer count");
    need(4 * p_cnt, "pointers");
    for (std::size_t k = 0; k < p_cnt; ++k) {
      const std::string& symbol = tok[i];
      std::size_t target = number(tok[i + 1], 10, "pointer offset");
      const std::string& st = tok[i + 3];
      if (st.size() != 4) bad(offset, "bad source/target field '" + st + "'");
      int source_word = static_cast<int>(number(st.substr(0, 2), 16, "source word"));
      int target_word = static_cast<int>(number(st.substr(2, 2), 16, "target word"));
      if (symbol == "!") s.antonyms.push_back({source_word, target, target_word});
      i += 4;
    }
    return s;
  }

  std::string name_;
  std::string text_;
  std::unordered_map<std::size_t, Synset> cache_;
};

void import_class(const std::filesystem::path& dir, std::string_view suffix, PosClass pos, Lexicon& lex) {
  std::string index_name = "index." + std::string(suffix);
  std::string data_name = "data." + std::string(suffix);
  std::string index = read_file(dir / index_name);
  DataFile data(data_name, read_file(dir / data_name));

  std::size_t offset = 0;
  while (offset < index.size()) {
    std::size_t end = index.find('\n', offset);
    if (end == std::string::npos) end = index.size();
    std::string_view line(index.data() + offset, end - offset);
    std::size_t line_offset = offset;
    offset = end + 1;
    line = detail::trim_cr(line);
    if (line.empty() || line.front() == ' ') continue;  // license header
    auto tok = detail::split_ws(line);
    auto bad = [&](const std::string& what) {
      fail(ErrorCode::ParseError, index_name + ": byte " + std::to_string(line_offset) + ": " + what);
    };
    auto num = [&](std::size_t k) -> std::size_t {
      if (k >= tok.size()) bad("truncated index line");
      std::size_t v = 0;
      const std::string& s = tok[k];
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || p != s.data() + s.size()) bad("bad number '" + s + "'");
      return v;
    };
    std::size_t synset_cnt = num(2);
    std::size_t p_cnt = num(3);
    std::size_t first = 4 + p_cnt + 2;
    if (tok.size() != first + synset_cnt) bad("synset count does not match offsets listed");
    std::string lemma = wordnet_lemma(tok[0]);
    for (std::size_t k = first; k < tok.size(); ++k) {
      const Synset& s = data.at(num(k));
      int self = 0;
      for (std::size_t w = 0; w < s.words.size(); ++w) {
        if (s.words[w] == lemma) self = static_cast<int>(w) + 1;
        else lex.add(lemma, pos, Relation::Synonym, s.words[w]);
      }
      for (const auto& a : s.antonyms) {
        if (a.source != 0 && a.source != self) continue;
        const Synset& t = data.at(a.target_offset);
        if (a.target == 0) {
          for (const auto& w : t.words) lex.add(lemma, pos, Relation::Antonym, w);
        } else if (a.target >= 1 && static_cast<std::size_t>(a.target) <= t.words.size()) {
          lex.add(lemma, pos, Relation::Antonym, t.words[a.target - 1]);
        } else {
          fail(ErrorCode::ParseError, data_name + ": byte " + std::to_string(a.target_offset) +
                                          ": antonym target word out of range");
        }
      }
    }
  }
}

}  // namespace

Lexicon import_wordnet(const std::string& dict_dir) {
  std::filesystem::path dir(dict_dir);
  if (!std::filesystem::is_directory(dir)) fail(ErrorCode::MissingFile, dict_dir);
  Lexicon lex;
  import_class(dir, "noun", PosClass::Noun, lex);
  import_class(dir, "verb", PosClass::Verb, lex);
  import_class(dir, "adj", PosClass::Adjective, lex);
  lex.close_antonyms();
  return lex;
}

}  // namespace finestyle
