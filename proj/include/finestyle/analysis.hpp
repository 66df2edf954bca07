#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finestyle/tree.hpp"

namespace finestyle {

// Aligned-prefix mismatches plus the length difference.
std::size_t hamming(const Sentence& a, const Sentence& b);
std::size_t hamming(const std::vector<std::string>& a, const std::vector<std::string>& b);

enum class Tier { Easy, Medium, Hard };
std::string_view to_string(Tier tier);

inline constexpr double kEasyBelow = 3.5;
inline constexpr double kHardAbove = 7.0;
Tier tier_of(double mean_hamming);

struct DifficultyReport {
  std::string transfer;
  double mean_hamming = 0.0;
  Tier tier = Tier::Easy;
  std::size_t n_pairs = 0;
};

// Throws EmptyGroup on an empty pair list.
DifficultyReport difficulty_report(std::string transfer, const std::vector<std::pair<Sentence, Sentence>>& pairs);

std::string to_json_line(const DifficultyReport& report);
std::string format_table(const std::vector<DifficultyReport>& reports);

struct CorpusStats {
  std::size_t sentences = 0;
  std::size_t tokens = 0;
  std::map<std::size_t, std::size_t> length_histogram;
  std::map<std::string, std::size_t> pos_counts;  // only filled from trees
  std::vector<std::pair<std::string, std::size_t>> top_tokens;  // count desc, then token asc
};

CorpusStats corpus_stats(const std::vector<Sentence>& sentences, std::size_t top_k = 10);
CorpusStats corpus_stats(const std::vector<ParseTree>& trees, std::size_t top_k = 10);

std::string to_json(const CorpusStats& stats);
std::string format_table(const CorpusStats& stats);
std::string histogram_csv(const CorpusStats& stats);

}  // namespace finestyle
