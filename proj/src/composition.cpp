#include "finestyle/composition.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "finestyle/error.hpp"
#include "finestyle/syntax.hpp"

namespace finestyle {

std::string TransferLabel::text() const {
  std::string out;
  for (const auto& [name, value] : dims) {
    if (!out.empty()) out += ' ';
    out += std::to_string(value);
  }
  return out;
}

bool TransferLabel::is_identity() const {
  for (const auto& d : dims) {
    if (d.second != 0) return false;
  }
  return true;
}

TransferLabel parse_label(std::string_view text, const std::vector<const Dimension*>& dims) {
  TransferLabel label;
  std::istringstream in{std::string(text)};
  std::string tok;
  std::size_t i = 0;
  while (in >> tok) {
    if (i >= dims.size()) fail(ErrorCode::InvalidArgument, "label has too many tokens: " + std::string(text));
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || v < 0 ||
        v > static_cast<int>(dims[i]->tokens.size()))
      fail(ErrorCode::InvalidArgument, "bad token '" + tok + "' for dimension " + std::string(dims[i]->name));
    label.dims.push_back({std::string(dims[i]->name), v});
    ++i;
  }
  if (i != dims.size()) fail(ErrorCode::InvalidArgument, "label has too few tokens: " + std::string(text));
  return label;
}

std::vector<const Dimension*> dimensions_by_name(const std::vector<std::string>& names) {
  std::vector<const Dimension*> out;
  for (const auto& n : names) out.push_back(&dimension_by_name(n));
  return out;
}

namespace {

bool is_skip(const Error& e) {
  return e.code() == ErrorCode::Inapplicable || e.code() == ErrorCode::MissingAgent;
}

// Applies the nonzero tokens in order; nullopt if any step does not apply.
std::optional<ParseTree> apply_tokens(const ParseTree& tree, const std::vector<const Dimension*>& dims,
                                      const std::vector<int>& tokens, const TransferContext& ctx) {
  ParseTree cur = tree;
  for (std::size_t d = 0; d < dims.size(); ++d) {
    if (tokens[d] == 0) continue;
    try {
      cur = apply_transfer(dims[d]->tokens[tokens[d] - 1], cur, ctx).tree;
    } catch (const Error& e) {
      if (is_skip(e)) return std::nullopt;
      throw;
    }
  }
  return cur;
}

std::vector<std::vector<int>> all_labels(const std::vector<const Dimension*>& dims) {
  std::vector<std::vector<int>> out{{}};
  for (const auto* d : dims) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : out) {
      for (int v = 0; v <= static_cast<int>(d->tokens.size()); ++v) {
        auto l = prefix;
        l.push_back(v);
        next.push_back(std::move(l));
      }
    }
    out = std::move(next);
  }
  return out;
}

TransferLabel make_label(const std::vector<const Dimension*>& dims, const std::vector<int>& tokens) {
  TransferLabel l;
  for (std::size_t d = 0; d < dims.size(); ++d) l.dims.push_back({std::string(dims[d]->name), tokens[d]});
  return l;
}

}  // namespace

std::vector<ParallelPair> compose_grid(const ParseTree& tree, const std::vector<const Dimension*>& dims,
                                       const TransferContext& ctx, const GridOptions& options) {
  if (dims.empty()) fail(ErrorCode::InvalidArgument, "no dimensions");
  auto labels = all_labels(dims);

  std::vector<std::pair<std::vector<int>, ParseTree>> variants;
  for (const auto& l : labels) {
    if (auto v = apply_tokens(tree, dims, l, ctx)) variants.push_back({l, std::move(*v)});
  }

  std::vector<ParallelPair> pairs;
  bool any_change = false;
  for (const auto& [vlabel, vtree] : variants) {
    Sentence source = extract_sentence(vtree);
    for (const auto& l : labels) {
      bool identity = std::all_of(l.begin(), l.end(), [](int v) { return v == 0; });
      if (identity) {
        if (options.include_identity) pairs.push_back({make_label(dims, l), source, source});
        continue;
      }
      auto target = apply_tokens(vtree, dims, l, ctx);
      if (!target) continue;
      pairs.push_back({make_label(dims, l), source, extract_sentence(*target)});
      any_change = true;
    }
  }
  if (!any_change) fail(ErrorCode::NoApplicableTransfer, "no dimension applies to this sentence");
  return pairs;
}

int inverse_token(TransferId id, const ParseTree& tree) {
  const TransferInfo& info = transfer_info(id);
  if (info.family == "voice" || info.family == "pp-position") return 3 - info.token;
  if (info.family == "tense") {
    for (auto [tense, token] : {std::pair{Tense::Future, 1}, {Tense::Past, 2}, {Tense::Present, 3}}) {
      try {
        if (to_tense(tree, tense) == tree) return token;
      } catch (const Error& e) {
        if (!is_skip(e)) throw;
      }
    }
    inapplicable("tense of the clause is not recognizable");
  }
  fail(ErrorCode::InvalidArgument, std::string(info.name) + " has no inverse transfer");
}

ParallelPair reverse_chain(const ParseTree& tree, const Sentence& annotated,
                           const std::pair<std::string, int>& annotated_dim,
                           std::optional<TransferId> auto_transfer, const TransferContext& ctx) {
  ParallelPair p;
  p.target = annotated;
  if (!auto_transfer) {
    p.source = extract_sentence(tree);
    p.label.dims.push_back(annotated_dim);
    return p;
  }
  int inverse = inverse_token(*auto_transfer, tree);
  p.source = apply_transfer(*auto_transfer, tree, ctx).sentence;
  p.label.dims.push_back({std::string(transfer_info(*auto_transfer).family), inverse});
  p.label.dims.push_back(annotated_dim);
  return p;
}

SplitRatios parse_ratios(std::string_view text) {
  std::vector<double> v;
  std::string s(text);
  std::istringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidArgument, "bad ratio '" + part + "'");
    }
  }
  if (v.size() != 3) fail(ErrorCode::InvalidArgument, "need three ratios, got '" + s + "'");
  double sum = v[0] + v[1] + v[2];
  if (std::abs(sum - 100.0) < 1e-6) {
    for (auto& x : v) x /= 100.0;
    sum = 1.0;
  }
  if (v[0] <= 0 || v[1] <= 0 || v[2] <= 0 || std::abs(sum - 1.0) > 1e-6)
    fail(ErrorCode::InvalidArgument, "ratios must be positive and sum to 1: '" + s + "'");
  return {v[0], v[1], v[2]};
}

DatasetSplit split_pairs(std::vector<ParallelPair> pairs, const SplitRatios& ratios, std::uint64_t seed) {
  if (pairs.empty()) fail(ErrorCode::EmptyInput, "no pairs to split");
  std::mt19937_64 rng(seed);
  for (std::size_t i = pairs.size() - 1; i > 0; --i) {
    std::size_t j = rng() % (i + 1);
    std::swap(pairs[i], pairs[j]);
  }
  const double n = static_cast<double>(pairs.size());
  auto n_valid = static_cast<std::size_t>(std::floor(n * ratios.valid + 1e-9));
  auto n_test = static_cast<std::size_t>(std::floor(n * ratios.test + 1e-9));
  std::size_t n_train = pairs.size() - n_valid - n_test;
  DatasetSplit out;
  auto it = std::make_move_iterator(pairs.begin());
  out.train.assign(it, it + n_train);
  out.valid.assign(it + n_train, it + n_train + n_valid);
  out.test.assign(it + n_train + n_valid, std::make_move_iterator(pairs.end()));
  return out;
}

std::string format_pair(const ParallelPair& pair) {
  return pair.label.text() + '\t' + pair.source.text() + '\t' + pair.target.text();
}

DatasetSplit emit_dataset(std::vector<ParallelPair> pairs, const SplitRatios& ratios, std::uint64_t seed,
                          const std::filesystem::path& dir) {
  for (auto& p : pairs) {
    p.source = replace_numerals(p.source);
    p.target = replace_numerals(p.target);
  }
  DatasetSplit split = split_pairs(std::move(pairs), ratios, seed);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) fail(ErrorCode::Io, dir.string() + ": " + ec.message());
  auto write = [&](const char* name, const std::vector<ParallelPair>& part) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) fail(ErrorCode::Io, (dir / name).string() + ": cannot open for writing");
    for (const auto& p : part) out << format_pair(p) << '\n';
    if (!out) fail(ErrorCode::Io, (dir / name).string() + ": write failed");
  };
  write("train.tsv", split.train);
  write("valid.tsv", split.valid);
  write("test.tsv", split.test);

  nlohmann::ordered_json m;
  m["seed"] = seed;
  m["ratios"] = {ratios.train, ratios.valid, ratios.test};
  m["counts"] = {{"train", split.train.size()}, {"valid", split.valid.size()}, {"test", split.test.size()}};
  std::ofstream mf(dir / "split_manifest.json", std::ios::binary);
  if (!mf) fail(ErrorCode::Io, (dir / "split_manifest.json").string() + ": cannot open for writing");
  mf << m.dump(2) << '\n';
  return split;
}

}  // namespace finestyle
