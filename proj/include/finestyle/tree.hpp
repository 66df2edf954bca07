#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace finestyle {

// Labeled ordered constituency tree. Preterminals carry the word directly:
// a node has a word iff it has no children, and its label is the POS tag.
struct ParseTree {
  std::string label;
  std::vector<ParseTree> children;
  std::optional<std::string> word;

  static ParseTree leaf(std::string tag, std::string word);
  static ParseTree node(std::string label, std::vector<ParseTree> children);

  bool is_preterminal() const { return word.has_value(); }

  // Label with function tags and co-index suffixes removed ("NP-SBJ-1" -> "NP").
  std::string category() const;

  std::size_t leaf_count() const;
  std::size_t depth() const;

  friend bool operator==(const ParseTree&, const ParseTree&) = default;
};

using NodePath = std::vector<std::size_t>;

const ParseTree& node_at(const ParseTree& root, const NodePath& path);
ParseTree& node_at(ParseTree& root, const NodePath& path);

// Ordered token sequence; the surface form exchanged in parallel pairs.
struct Sentence {
  std::vector<std::string> tokens;
  std::string source_id;

  std::string text() const;  // tokens joined by single spaces
  std::size_t size() const { return tokens.size(); }

  // Equality compares tokens only; the corpus id is provenance.
  friend bool operator==(const Sentence& a, const Sentence& b) {
    return a.tokens == b.tokens;
  }
};

Sentence sentence_from_text(std::string_view text, std::string source_id = {});

// Penn Treebank bracketing. An unlabeled outermost wrapper "( (S ...) )" is
// unwrapped to its single child.
ParseTree parse_bracketed(std::string_view text);
std::string serialize(const ParseTree& tree);

Sentence extract_sentence(const ParseTree& tree, std::string source_id = {});

// Token-level normalization: punctuation tokens dropped, case lowered, the
// reserved "NUM" token left untouched. Idempotent.
Sentence normalize(const Sentence& sentence);

// Tree-level normalization used before any transfer: empty elements
// (-NONE-) and punctuation preterminals removed, emptied constituents pruned,
// words lowercased.
ParseTree normalize_tree(const ParseTree& tree);

bool is_punctuation_tag(std::string_view tag);
bool is_punctuation_token(std::string_view token);

// Root clause with at least one NP and one VP below it.
bool is_complete(const ParseTree& tree);

inline constexpr std::size_t kMinSentenceTokens = 5;
inline constexpr std::size_t kMaxSentenceTokens = 12;

// Keeps normalized trees with 5..12 tokens that pass is_complete, in order.
std::vector<ParseTree> filter_corpus(const std::vector<ParseTree>& trees);

bool is_numeral(std::string_view token);
inline constexpr std::string_view kNumToken = "NUM";
Sentence replace_numerals(const Sentence& sentence);

// Streams trees from a treebank file: one bracketed tree per block, where a
// block ends when parentheses balance. Blank lines and ";"-comments between
// trees are ignored.
class TreebankReader {
 public:
  TreebankReader(std::istream& in, std::string source_name);

  std::optional<ParseTree> next();

  // Identifier of the most recently returned tree ("name:ordinal").
  const std::string& current_id() const { return current_id_; }
  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::string source_name_;
  std::string current_id_;
  std::size_t line_ = 0;
  std::size_t count_ = 0;
};

std::vector<ParseTree> read_treebank_file(const std::string& path);

}  // namespace finestyle
