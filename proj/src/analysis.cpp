#include "finestyle/analysis.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "finestyle/error.hpp"

namespace finestyle {

std::size_t hamming(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::size_t common = std::min(a.size(), b.size());
  std::size_t d = std::max(a.size(), b.size()) - common;
  for (std::size_t i = 0; i < common; ++i) {
    if (a[i] != b[i]) ++d;
  }
  return d;
}

std::size_t hamming(const Sentence& a, const Sentence& b) { return hamming(a.tokens, b.tokens); }

std::string_view to_string(Tier tier) {
  switch (tier) {
    case Tier::Easy: return "easy";
    case Tier::Medium: return "medium";
    case Tier::Hard: return "hard";
  }
  return "easy";
}

Tier tier_of(double mean) {
  if (mean < kEasyBelow) return Tier::Easy;
  if (mean <= kHardAbove) return Tier::Medium;
  return Tier::Hard;
}

DifficultyReport difficulty_report(std::string transfer, const std::vector<std::pair<Sentence, Sentence>>& pairs) {
  if (pairs.empty()) fail(ErrorCode::EmptyGroup, "no pairs for " + transfer);
  std::size_t total = 0;
  for (const auto& [a, b] : pairs) total += hamming(a, b);
  DifficultyReport r;
  r.transfer = std::move(transfer);
  r.n_pairs = pairs.size();
  r.mean_hamming = static_cast<double>(total) / static_cast<double>(pairs.size());
  r.tier = tier_of(r.mean_hamming);
  return r;
}

std::string to_json_line(const DifficultyReport& r) {
  nlohmann::ordered_json j;
  j["transfer"] = r.transfer;
  j["mean_hamming"] = r.mean_hamming;
  j["tier"] = to_string(r.tier);
  j["n_pairs"] = r.n_pairs;
  return j.dump();
}

std::string format_table(const std::vector<DifficultyReport>& reports) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-24s %8s %8s  %s\n", "transfer", "pairs", "hamming", "tier");
  out << line;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%-24s %8zu %8.3f  %s\n", r.transfer.c_str(), r.n_pairs, r.mean_hamming,
                  std::string(to_string(r.tier)).c_str());
    out << line;
  }
  return out.str();
}

namespace {

void finish_top(CorpusStats& s, const std::map<std::string, std::size_t>& counts, std::size_t k) {
  s.top_tokens.assign(counts.begin(), counts.end());
  std::stable_sort(s.top_tokens.begin(), s.top_tokens.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (s.top_tokens.size() > k) s.top_tokens.resize(k);
}

}  // namespace

CorpusStats corpus_stats(const std::vector<Sentence>& sentences, std::size_t top_k) {
  CorpusStats s;
  std::map<std::string, std::size_t> counts;
  for (const auto& sent : sentences) {
    ++s.sentences;
    s.tokens += sent.size();
    ++s.length_histogram[sent.size()];
    for (const auto& t : sent.tokens) ++counts[t];
  }
  finish_top(s, counts, top_k);
  return s;
}

CorpusStats corpus_stats(const std::vector<ParseTree>& trees, std::size_t top_k) {
  std::vector<Sentence> sentences;
  sentences.reserve(trees.size());
  for (const auto& t : trees) sentences.push_back(extract_sentence(t));
  CorpusStats s = corpus_stats(sentences, top_k);
  std::function<void(const ParseTree&)> walk = [&](const ParseTree& n) {
    if (n.is_preterminal()) {
      ++s.pos_counts[n.label];
      return;
    }
    for (const auto& c : n.children) walk(c);
  };
  for (const auto& t : trees) walk(t);
  return s;
}

std::string to_json(const CorpusStats& s) {
  nlohmann::ordered_json j;
  j["sentences"] = s.sentences;
  j["tokens"] = s.tokens;
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (const auto& [len, n] : s.length_histogram) hist[std::to_string(len)] = n;
  j["length_histogram"] = hist;
  nlohmann::ordered_json pos = nlohmann::ordered_json::object();
  for (const auto& [tag, n] : s.pos_counts) pos[tag] = n;
  j["pos_counts"] = pos;
  nlohmann::ordered_json top = nlohmann::ordered_json::array();
  for (const auto& [tok, n] : s.top_tokens) top.push_back({tok, n});
  j["top_tokens"] = top;
  return j.dump();
}

std::string format_table(const CorpusStats& s) {
  std::ostringstream out;
  out << "sentences " << s.sentences << "\ntokens " << s.tokens << "\n\nlength count\n";
  for (const auto& [len, n] : s.length_histogram) out << len << ' ' << n << '\n';
  if (!s.pos_counts.empty()) {
    out << "\npos count\n";
    for (const auto& [tag, n] : s.pos_counts) out << tag << ' ' << n << '\n';
  }
  out << "\ntoken count\n";
  for (const auto& [tok, n] : s.top_tokens) out << tok << ' ' << n << '\n';
  return out.str();
}

std::string histogram_csv(const CorpusStats& s) {
  std::string out = "length,count\n";
  for (const auto& [len, n] : s.length_histogram) out += std::to_string(len) + ',' + std::to_string(n) + '\n';
  return out;
}

}  // namespace finestyle
