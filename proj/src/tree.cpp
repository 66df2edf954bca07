#include "finestyle/tree.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "finestyle/error.hpp"
#include "text_util.hpp"

namespace finestyle {

ParseTree ParseTree::leaf(std::string tag, std::string word) {
  ParseTree t;
  t.label = std::move(tag);
  t.word = std::move(word);
  return t;
}

ParseTree ParseTree::node(std::string label, std::vector<ParseTree> children) {
  ParseTree t;
  t.label = std::move(label);
  t.children = std::move(children);
  return t;
}

std::string ParseTree::category() const {
  // Bracket and empty-element tags start with '-' and are kept whole.
  if (label.empty() || label.front() == '-') return label;
  auto cut = label.find_first_of("-=");
  return cut == std::string::npos ? label : label.substr(0, cut);
}

std::size_t ParseTree::leaf_count() const {
  if (is_preterminal()) return 1;
  std::size_t n = 0;
  for (const auto& c : children) n += c.leaf_count();
  return n;
}

std::size_t ParseTree::depth() const {
  if (is_preterminal()) return 1;
  std::size_t d = 0;
  for (const auto& c : children) d = std::max(d, c.depth());
  return d + 1;
}

const ParseTree& node_at(const ParseTree& root, const NodePath& path) {
  const ParseTree* t = &root;
  for (std::size_t i : path) t = &t->children.at(i);
  return *t;
}

ParseTree& node_at(ParseTree& root, const NodePath& path) {
  ParseTree* t = &root;
  for (std::size_t i : path) t = &t->children.at(i);
  return *t;
}

std::string Sentence::text() const { return detail::join(tokens, " "); }

Sentence sentence_from_text(std::string_view text, std::string source_id) {
  Sentence s;
  s.tokens = detail::split_ws(text);
  s.source_id = std::move(source_id);
  return s;
}

namespace {

class BracketParser {
 public:
  explicit BracketParser(std::string_view text) : text_(text) {}

  ParseTree parse() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '(')
      fail(ErrorCode::UnbalancedBrackets, "expected '(' at offset " + std::to_string(pos_));
    ParseTree t = parse_node();
    skip_ws();
    if (pos_ != text_.size())
      fail(ErrorCode::UnbalancedBrackets,
           "trailing input at offset " + std::to_string(pos_));
    // "( (S ...) )" wrapper used by the treebank distribution.
    if (t.label.empty()) {
      if (t.children.size() != 1) fail(ErrorCode::EmptyNode, "unlabeled root with several children");
      ParseTree inner = std::move(t.children.front());
      return inner;
    }
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string atom() {
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) break;
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  ParseTree parse_node() {
    std::size_t open = pos_;
    ++pos_;  // '('
    skip_ws();
    if (pos_ >= text_.size()) fail(ErrorCode::UnbalancedBrackets, "unterminated node at offset " + std::to_string(open));
    ParseTree t;
    if (text_[pos_] != '(' && text_[pos_] != ')') t.label = atom();
    std::vector<std::string> words;
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size())
        fail(ErrorCode::UnbalancedBrackets, "unterminated node at offset " + std::to_string(open));
      char c = text_[pos_];
      if (c == ')') {
        ++pos_;
        break;
      }
      if (c == '(') {
        t.children.push_back(parse_node());
      } else {
        words.push_back(atom());
      }
    }
    if (!words.empty()) {
      if (words.size() != 1 || !t.children.empty() || t.label.empty())
        fail(ErrorCode::UnbalancedBrackets,
             "malformed preterminal at offset " + std::to_string(open));
      t.word = std::move(words.front());
    } else if (t.children.empty()) {
      fail(ErrorCode::EmptyNode, "empty constituent at offset " + std::to_string(open));
    }
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void serialize_into(const ParseTree& t, std::string& out) {
  out += '(';
  out += t.label;
  if (t.is_preterminal()) {
    out += ' ';
    out += *t.word;
  }
  for (const auto& c : t.children) {
    out += ' ';
    serialize_into(c, out);
  }
  out += ')';
}

void collect_words(const ParseTree& t, std::vector<std::string>& out) {
  if (t.is_preterminal()) {
    out.push_back(*t.word);
    return;
  }
  for (const auto& c : t.children) collect_words(c, out);
}

// Returns false when the node should be dropped entirely.
bool normalize_node(ParseTree& t) {
  if (t.is_preterminal()) {
    if (t.label == "-NONE-" || is_punctuation_tag(t.label)) return false;
    if (*t.word != kNumToken) *t.word = detail::to_lower(*t.word);
    return true;
  }
  std::vector<ParseTree> kept;
  kept.reserve(t.children.size());
  for (auto& c : t.children) {
    if (normalize_node(c)) kept.push_back(std::move(c));
  }
  t.children = std::move(kept);
  return !t.children.empty();
}

bool dominates_category(const ParseTree& t, std::string_view cat) {
  for (const auto& c : t.children) {
    if (c.category() == cat || dominates_category(c, cat)) return true;
  }
  return false;
}

}  // namespace

ParseTree parse_bracketed(std::string_view text) { return BracketParser(text).parse(); }

std::string serialize(const ParseTree& tree) {
  std::string out;
  serialize_into(tree, out);
  return out;
}

Sentence extract_sentence(const ParseTree& tree, std::string source_id) {
  Sentence s;
  collect_words(tree, s.tokens);
  s.source_id = std::move(source_id);
  return s;
}

bool is_punctuation_tag(std::string_view tag) {
  static constexpr std::string_view kTags[] = {",", ".", ":", "``", "''", "-LRB-", "-RRB-",
                                               "-LCB-", "-RCB-", "HYPH", "NFP"};
  return std::find(std::begin(kTags), std::end(kTags), tag) != std::end(kTags);
}

bool is_punctuation_token(std::string_view token) {
  if (token.empty()) return false;
  static constexpr std::string_view kBrackets[] = {"-LRB-", "-RRB-", "-LCB-", "-RCB-",
                                                   "-LSB-", "-RSB-"};
  if (std::find(std::begin(kBrackets), std::end(kBrackets), token) != std::end(kBrackets))
    return true;
  // Symbols that carry content ($ % & #) are not punctuation.
  static constexpr std::string_view kPunct = ".,;:!?'\"`()[]{}-/\\*_~|";
  return std::all_of(token.begin(), token.end(),
                     [](char c) { return kPunct.find(c) != std::string_view::npos; });
}

Sentence normalize(const Sentence& sentence) {
  Sentence out;
  out.source_id = sentence.source_id;
  for (const auto& tok : sentence.tokens) {
    if (tok.empty() || is_punctuation_token(tok)) continue;
    out.tokens.push_back(tok == kNumToken ? tok : detail::to_lower(tok));
  }
  if (out.tokens.empty()) fail(ErrorCode::EmptySentence, "no tokens left after normalization");
  return out;
}

ParseTree normalize_tree(const ParseTree& tree) {
  ParseTree t = tree;
  if (!normalize_node(t)) fail(ErrorCode::EmptySentence, "no tokens left after normalization");
  return t;
}

bool is_complete(const ParseTree& tree) {
  const ParseTree* root = &tree;
  while (!root->is_preterminal() && root->children.size() == 1 &&
         (root->category() == "ROOT" || root->category() == "TOP"))
    root = &root->children.front();
  if (root->category() != "S") return false;
  return dominates_category(*root, "NP") && dominates_category(*root, "VP");
}

std::vector<ParseTree> filter_corpus(const std::vector<ParseTree>& trees) {
  std::vector<ParseTree> kept;
  for (const auto& t : trees) {
    std::size_t n = t.leaf_count();
    if (n < kMinSentenceTokens || n > kMaxSentenceTokens) continue;
    if (!is_complete(t)) continue;
    kept.push_back(t);
  }
  return kept;
}

bool is_numeral(std::string_view token) {
  // digits, optionally grouped or split by , . : / \ - ("1,200" "3.5" "1\/2")
  if (token.empty() || !std::isdigit(static_cast<unsigned char>(token.front()))) return false;
  if (!std::isdigit(static_cast<unsigned char>(token.back()))) return false;
  bool prev_sep = false;
  for (char c : token) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      prev_sep = false;
    } else if (std::string_view(",.:/\\-").find(c) != std::string_view::npos) {
      if (prev_sep && c != '/') return false;
      prev_sep = true;
    } else {
      return false;
    }
  }
  return true;
}

Sentence replace_numerals(const Sentence& sentence) {
  Sentence out = sentence;
  for (auto& tok : out.tokens) {
    if (is_numeral(tok)) tok = std::string(kNumToken);
  }
  return out;
}

TreebankReader::TreebankReader(std::istream& in, std::string source_name)
    : in_(in), source_name_(std::move(source_name)) {}

std::optional<ParseTree> TreebankReader::next() {
  std::string block;
  int depth = 0;
  std::size_t start_line = 0;
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (block.empty()) {
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == ';') continue;
      start_line = line_;
    }
    for (char c : line) {
      if (c == '(') ++depth;
      else if (c == ')') --depth;
    }
    block += line;
    block += '\n';
    if (depth <= 0) break;
  }
  if (block.empty()) return std::nullopt;
  try {
    ParseTree t = parse_bracketed(block);
    ++count_;
    current_id_ = source_name_ + ":" + std::to_string(count_);
    return t;
  } catch (const Error& e) {
    throw Error(e.code(), source_name_ + ":" + std::to_string(start_line) + ": " + e.what());
  }
}

std::vector<ParseTree> read_treebank_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::MissingFile, path);
  TreebankReader reader(in, path);
  std::vector<ParseTree> trees;
  while (auto t = reader.next()) trees.push_back(std::move(*t));
  return trees;
}

}  // namespace finestyle
