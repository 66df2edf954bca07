#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finestyle/morphology.hpp"
#include "finestyle/tree.hpp"

namespace finestyle {

// Lexical classes covered by the lexicon. Adverbs are not included.
enum class PosClass { Noun, Verb, Adjective };

std::string_view to_string(PosClass pos);
std::optional<PosClass> pos_class_from_string(std::string_view s);  // "noun" "verb" "adj"
// NN/NNS -> noun, VB* -> verb, JJ* -> adjective. Proper nouns and MD map to nullopt.
std::optional<PosClass> pos_class_of_tag(std::string_view tag);

enum class Relation { Synonym, Antonym };
std::string_view to_string(Relation rel);

enum class FrequencyMode { MostFrequent, LeastFrequent };

using FrequencyTable = std::map<std::string, std::uint64_t, std::less<>>;

class Lexicon {
 public:
  struct Record {
    std::string lemma;
    PosClass pos;
    Relation relation;
    std::string target;
  };

  // Adds target to lemma's list. Self-relations and repeats are ignored.
  // Returns whether the list grew.
  bool add(std::string_view lemma, PosClass pos, Relation rel, std::string_view target);

  // b in antonyms(a) => a in antonyms(b); missing reverse links are appended.
  void close_antonyms();

  const std::vector<std::string>& related(std::string_view lemma, PosClass pos, Relation rel) const;
  const std::vector<std::string>& synonyms(std::string_view lemma, PosClass pos) const {
    return related(lemma, pos, Relation::Synonym);
  }
  const std::vector<std::string>& antonyms(std::string_view lemma, PosClass pos) const {
    return related(lemma, pos, Relation::Antonym);
  }

  std::uint64_t frequency(std::string_view lemma) const;
  void set_frequencies(FrequencyTable table) { frequency_ = std::move(table); }
  const FrequencyTable& frequencies() const { return frequency_; }

  // Records in key order, each list in stored order.
  std::vector<Record> records() const;
  std::size_t lemma_count() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const Lexicon&, const Lexicon&) = default;

 private:
  struct Lists {
    std::vector<std::string> synonyms;
    std::vector<std::string> antonyms;
    friend bool operator==(const Lists&, const Lists&) = default;
  };
  using Key = std::pair<std::string, PosClass>;

  std::map<Key, Lists> entries_;
  FrequencyTable frequency_;
};

// Native format: lemma <TAB> noun|verb|adj <TAB> SYN|ANT <TAB> target.
// '#' lines and blank lines are skipped. Antonym closure is applied.
Lexicon parse_lexicon(std::istream& in, const std::string& source_name);
Lexicon load_lexicon(const std::string& path);
void write_lexicon(const Lexicon& lexicon, std::ostream& out);

// lemma <TAB> count
FrequencyTable parse_frequency(std::istream& in, const std::string& source_name);
FrequencyTable load_frequency(const std::string& path);
void write_frequency(const FrequencyTable& table, std::ostream& out);

// Surface counts: each token is its own lemma.
FrequencyTable build_frequency(const std::vector<Sentence>& corpus);
// Noun, verb and adjective leaves are counted under their lemma, other leaves
// under the lowercased surface form.
FrequencyTable build_frequency(const std::vector<ParseTree>& corpus, const Morphology& morph);

// The synonym with the highest (lowest) count; ties go to the
// lexicographically smallest lemma. Throws NoSynonyms on an empty list.
std::string rank_synonyms(const Lexicon& lexicon, std::string_view lemma, PosClass pos,
                          FrequencyMode mode);

// Reads index.{noun,verb,adj} and data.{noun,verb,adj} from a WordNet 3.0
// dict directory. Synonym order follows sense order; multiword lemmas use
// '-' in place of '_'.
Lexicon import_wordnet(const std::string& dict_dir);

}  // namespace finestyle
