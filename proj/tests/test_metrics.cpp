#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "finestyle/error.hpp"
#include "finestyle/metrics.hpp"

using namespace finestyle;

namespace {

Sentence s(const std::string& text) { return sentence_from_text(text); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Io;
}

Sentence random_sentence(std::mt19937_64& rng, std::size_t max_len) {
  static const std::vector<std::string> vocab = {"the", "cat", "sat", "on", "mat", "a", "dog"};
  Sentence out;
  std::size_t n = rng() % (max_len + 1);
  for (std::size_t i = 0; i < n; ++i) out.tokens.push_back(vocab[rng() % vocab.size()]);
  return out;
}

// Brute-force BLEU: n-grams as joined strings, counts by linear scan.
double naive_bleu(const std::vector<Sentence>& c, const std::vector<Sentence>& r, int max_n) {
  double log_sum = 0;
  std::size_t cl = 0, rl = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    cl += c[i].size();
    rl += r[i].size();
  }
  for (int n = 1; n <= max_n; ++n) {
    std::size_t m = 0, t = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto grams = [n](const Sentence& x) {
        std::vector<std::string> g;
        for (std::size_t k = 0; k + n <= x.size(); ++k) {
          std::string j;
          for (int q = 0; q < n; ++q) j += x.tokens[k + q] + "|";
          g.push_back(j);
        }
        return g;
      };
      auto cg = grams(c[i]);
      auto rg = grams(r[i]);
      t += cg.size();
      std::vector<bool> used(rg.size(), false);
      for (const auto& g : cg) {
        for (std::size_t k = 0; k < rg.size(); ++k) {
          if (!used[k] && rg[k] == g) {
            used[k] = true;
            ++m;
            break;
          }
        }
      }
    }
    if (m == 0) return 0.0;
    log_sum += std::log(static_cast<double>(m) / static_cast<double>(t)) / max_n;
  }
  double bp = cl < rl ? std::exp(1.0 - static_cast<double>(rl) / static_cast<double>(cl)) : 1.0;
  return bp * std::exp(log_sum);
}

std::size_t naive_lcs(const std::vector<std::string>& a, const std::vector<std::string>& b, std::size_t i = 0,
                      std::size_t j = 0) {
  if (i == a.size() || j == b.size()) return 0;
  if (a[i] == b[j]) return 1 + naive_lcs(a, b, i + 1, j + 1);
  return std::max(naive_lcs(a, b, i + 1, j), naive_lcs(a, b, i, j + 1));
}

}  // namespace

TEST_CASE("bleu examples") {
  std::vector<Sentence> refs = {s("the cat sat on the mat"), s("a dog barked at the mailman today")};
  for (int n = 1; n <= 4; ++n) CHECK(bleu(refs, refs, n) == doctest::Approx(1.0));
  CHECK(bleu({s("the the the")}, {s("the cat sat")}, 1) == doctest::Approx(1.0 / 3.0));

  auto d = bleu_detail({s("the cat")}, {s("the cat sat on the mat")}, 2);
  CHECK(d.precisions == std::vector<double>{1.0, 1.0});
  CHECK(d.brevity_penalty == doctest::Approx(std::exp(1.0 - 3.0)));
  CHECK(d.score == doctest::Approx(std::exp(-2.0)));

  auto z = bleu_detail({s("a b c d")}, {s("a c b d")}, 3);
  CHECK(z.zero_orders == std::vector<int>{2, 3});
  CHECK(z.score == 0.0);

  CHECK(code_of([] { bleu({}, {}, 4); }) == ErrorCode::EmptyCorpus);
  CHECK(code_of([] { bleu({s("a")}, {}, 4); }) == ErrorCode::LengthMismatch);
  CHECK(code_of([] { bleu({s("a")}, {s("a")}, 5); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("rouge-l examples") {
  CHECK(rouge_l({s("a b c")}, {s("a b c")}) == doctest::Approx(1.0));
  CHECK(rouge_l({s("a b c")}, {s("d e f")}) == 0.0);
  const double p = 0.75, r = 1.0, b2 = 1.2 * 1.2;
  CHECK(rouge_l({s("a b c d")}, {s("a c d")}) == doctest::Approx((1 + b2) * p * r / (r + b2 * p)));
  CHECK(rouge_l({s("a b c d"), s("x")}, {s("a c d"), s("x")}) ==
        doctest::Approx(((1 + b2) * p * r / (r + b2 * p) + 1.0) / 2));
  CHECK(code_of([] { rouge_l({}, {}); }) == ErrorCode::EmptyCorpus);
  CHECK(code_of([] { rouge_l({s("a")}, {s("a"), s("b")}); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("score report") {
  std::vector<Sentence> c = {s("the cat sat on the mat")};
  auto r = score(c, c);
  for (double b : r.bleu) CHECK(b == doctest::Approx(1.0));
  CHECK(r.rouge_l == doctest::Approx(1.0));
  CHECK(r.n_candidates == 1);
  CHECK(to_json(r).find("\"bleu4\":1.0") != std::string::npos);
  CHECK(format_table(r).find("ROUGE-L") != std::string::npos);
}

TEST_CASE("metric properties over random corpora") {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 1000; ++round) {
    std::size_t n = 1 + rng() % 6;
    std::vector<Sentence> c, r;
    for (std::size_t i = 0; i < n; ++i) {
      c.push_back(random_sentence(rng, 8));
      r.push_back(random_sentence(rng, 8));
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Sentence> pc, pr;
    for (auto i : order) {
      pc.push_back(c[i]);
      pr.push_back(r[i]);
    }
    // Consistent renaming of every token.
    auto rename = [](std::vector<Sentence> v) {
      for (auto& x : v) {
        for (auto& t : x.tokens) t = "w_" + t;
      }
      return v;
    };
    for (int k = 1; k <= 4; ++k) {
      double b = bleu(c, r, k);
      CHECK(b >= 0.0);
      CHECK(b <= 1.0);
      CHECK(b == bleu(pc, pr, k));
      CHECK(b == bleu(rename(c), rename(r), k));
      CHECK(b == doctest::Approx(naive_bleu(c, r, k)));
    }
    double rl = rouge_l(c, r);
    CHECK(rl >= 0.0);
    CHECK(rl <= 1.0);
    CHECK(rl == rouge_l(pc, pr));
    CHECK(rl == rouge_l(rename(c), rename(r)));
    CHECK((rl == doctest::Approx(1.0)) == (c == r));
    for (std::size_t i = 0; i < n; ++i) CHECK(lcs_length(c[i].tokens, r[i].tokens) == naive_lcs(c[i].tokens, r[i].tokens));
  }
}
