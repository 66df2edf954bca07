#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "finestyle/tree.hpp"

namespace finestyle {

struct BleuResult {
  double score = 0.0;
  std::vector<double> precisions;  // clipped precision per order 1..max_n
  double brevity_penalty = 1.0;
  std::vector<int> zero_orders;    // orders with no matching n-gram
};

// Corpus BLEU with uniform weights and no smoothing. Throws EmptyCorpus,
// LengthMismatch, InvalidArgument (max_n outside 1..4).
BleuResult bleu_detail(const std::vector<Sentence>& candidates, const std::vector<Sentence>& references, int max_n);
double bleu(const std::vector<Sentence>& candidates, const std::vector<Sentence>& references, int max_n);

inline constexpr double kRougeBeta = 1.2;

std::size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b);
double rouge_l_pair(const Sentence& candidate, const Sentence& reference);
// Mean of per-pair F scores.
double rouge_l(const std::vector<Sentence>& candidates, const std::vector<Sentence>& references);

struct ScoreReport {
  std::array<double, 4> bleu{};
  double rouge_l = 0.0;
  std::size_t n_candidates = 0;
  std::vector<int> zero_orders;  // of the BLEU-4 computation
};

ScoreReport score(const std::vector<Sentence>& candidates, const std::vector<Sentence>& references);
std::string to_json(const ScoreReport& report);
std::string format_table(const ScoreReport& report);

}  // namespace finestyle
