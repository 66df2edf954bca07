#include "finestyle/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include <json.hpp>

#include "finestyle/error.hpp"

namespace finestyle {

namespace {

void check_corpus(const std::vector<Sentence>& c, const std::vector<Sentence>& r) {
  if (c.size() != r.size())
    fail(ErrorCode::LengthMismatch,
         std::to_string(c.size()) + " candidates vs " + std::to_string(r.size()) + " references");
  if (c.empty()) fail(ErrorCode::EmptyCorpus, "no candidates");
}

using NgramCounts = std::map<std::vector<std::string>, std::size_t>;

NgramCounts ngrams(const std::vector<std::string>& toks, int n) {
  NgramCounts out;
  for (std::size_t i = 0; i + n <= toks.size(); ++i) {
    ++out[std::vector<std::string>(toks.begin() + i, toks.begin() + i + n)];
  }
  return out;
}

}  // namespace

BleuResult bleu_detail(const std::vector<Sentence>& candidates, const std::vector<Sentence>& references, int max_n) {
  check_corpus(candidates, references);
  if (max_n < 1 || max_n > 4) fail(ErrorCode::InvalidArgument, "max_n must be in 1..4");
  std::vector<std::size_t> matched(max_n, 0), total(max_n, 0);
  std::size_t c_len = 0, r_len = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& c = candidates[i].tokens;
    const auto& r = references[i].tokens;
    c_len += c.size();
    r_len += r.size();
    for (int n = 1; n <= max_n; ++n) {
      NgramCounts rc = ngrams(r, n);
      for (const auto& [g, k] : ngrams(c, n)) {
        auto it = rc.find(g);
        matched[n - 1] += std::min(k, it == rc.end() ? std::size_t{0} : it->second);
        total[n - 1] += k;
      }
    }
  }
  BleuResult res;
  double log_sum = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    double p = total[n - 1] ? static_cast<double>(matched[n - 1]) / static_cast<double>(total[n - 1]) : 0.0;
    res.precisions.push_back(p);
    if (matched[n - 1] == 0) res.zero_orders.push_back(n);
    else log_sum += std::log(p) / max_n;
  }
  if (c_len == 0) res.brevity_penalty = 0.0;
  else if (c_len < r_len) res.brevity_penalty = std::exp(1.0 - static_cast<double>(r_len) / static_cast<double>(c_len));
  res.score = res.zero_orders.empty() ? res.brevity_penalty * std::exp(log_sum) : 0.0;
  return res;
}

double bleu(const std::vector<Sentence>& candidates, const std::vector<Sentence>& references, int max_n) {
  return bleu_detail(candidates, references, max_n).score;
}

std::size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double rouge_l_pair(const Sentence& candidate, const Sentence& reference) {
  const double c = static_cast<double>(candidate.size());
  const double r = static_cast<double>(reference.size());
  if (c == 0 || r == 0) return c == r ? 1.0 : 0.0;
  const double l = static_cast<double>(lcs_length(candidate.tokens, reference.tokens));
  if (l == 0) return 0.0;
  const double p = l / c, rec = l / r, b2 = kRougeBeta * kRougeBeta;
  return (1 + b2) * p * rec / (rec + b2 * p);
}

double rouge_l(const std::vector<Sentence>& candidates, const std::vector<Sentence>& references) {
  check_corpus(candidates, references);
  std::vector<double> f;
  f.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) f.push_back(rouge_l_pair(candidates[i], references[i]));
  std::sort(f.begin(), f.end());
  double sum = 0.0;
  for (double x : f) sum += x;
  return sum / static_cast<double>(f.size());
}

ScoreReport score(const std::vector<Sentence>& candidates, const std::vector<Sentence>& references) {
  ScoreReport r;
  for (int n = 1; n <= 4; ++n) {
    auto b = bleu_detail(candidates, references, n);
    r.bleu[n - 1] = b.score;
    if (n == 4) r.zero_orders = b.zero_orders;
  }
  r.rouge_l = rouge_l(candidates, references);
  r.n_candidates = candidates.size();
  return r;
}

std::string to_json(const ScoreReport& r) {
  nlohmann::ordered_json j;
  j["bleu1"] = r.bleu[0];
  j["bleu2"] = r.bleu[1];
  j["bleu3"] = r.bleu[2];
  j["bleu4"] = r.bleu[3];
  j["rougeL"] = r.rouge_l;
  j["n_candidates"] = r.n_candidates;
  j["zero_orders"] = r.zero_orders;
  return j.dump();
}

std::string format_table(const ScoreReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%8s %8s %8s %8s %8s\n%8.4f %8.4f %8.4f %8.4f %8.4f\n", "BLEU-1", "BLEU-2",
                "BLEU-3", "BLEU-4", "ROUGE-L", r.bleu[0], r.bleu[1], r.bleu[2], r.bleu[3], r.rouge_l);
  return buf;
}

}  // namespace finestyle
