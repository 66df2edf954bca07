#include "finestyle/pipeline.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "finestyle/error.hpp"

namespace finestyle {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

nlohmann::ordered_json config_json(const PipelineConfig& c) {
  nlohmann::ordered_json j;
  j["lexicon"] = c.lexicon_path;
  j["frequency"] = c.frequency_path;
  j["irregular_verbs"] = c.irregular_path;
  j["transfers"] = c.transfers;
  j["dimensions"] = c.dimensions;
  j["ratios"] = {c.ratios.train, c.ratios.valid, c.ratios.test};
  j["seed"] = c.seed;
  j["output_dir"] = c.output_dir.generic_string();
  j["identity_pairs"] = c.identity_pairs;
  return j;
}

bool is_skip(const Error& e) {
  return e.code() == ErrorCode::Inapplicable || e.code() == ErrorCode::MissingAgent;
}

// Reads up to n trees; returns false when the stream is exhausted.
bool read_batch(TreebankReader& reader, std::size_t n, std::vector<CorpusItem>& out) {
  out.clear();
  while (out.size() < n) {
    auto t = reader.next();
    if (!t) return false;
    out.push_back({reader.current_id(), normalize_tree(*t)});
  }
  return true;
}

}  // namespace

std::string PipelineConfig::canonical() const { return config_json(*this).dump(); }

std::string PipelineConfig::hash() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(canonical())));
  return buf;
}

void write_manifest(const std::filesystem::path& dir, std::string_view command, const PipelineConfig& config) {
  nlohmann::ordered_json m;
  m["tool"] = "finestyle";
  m["version"] = kToolVersion;
  m["command"] = command;
  m["config_hash"] = config.hash();
  m["seed"] = config.seed;
  m["config"] = config_json(config);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream out(dir / "manifest.json", std::ios::binary);
  if (!out) fail(ErrorCode::Io, (dir / "manifest.json").string() + ": cannot open for writing");
  out << m.dump(2) << '\n';
}

std::vector<TransferRecord> transfer_batch(const std::vector<CorpusItem>& items, TransferId id,
                                           const TransferContext& ctx, unsigned threads) {
  std::function<TransferRecord(std::size_t)> one = [&](std::size_t i) {
    TransferRecord r;
    r.id = items[i].id;
    r.source = extract_sentence(items[i].tree, items[i].id);
    try {
      r.outcome = apply_transfer(id, items[i].tree, ctx);
    } catch (const Error& e) {
      if (!is_skip(e)) throw Error(e.code(), r.id + ": " + e.what());
      r.skip_reason = e.what();
    }
    return r;
  };
  return parallel_map(items.size(), threads, one);
}

void write_records(const std::vector<TransferRecord>& records, const TransferSinks& sinks) {
  for (const auto& r : records) {
    if (!r.outcome) continue;
    if (sinks.pairs) *sinks.pairs << r.id << '\t' << r.source.text() << '\t' << r.outcome->sentence.text() << '\n';
    if (sinks.replacements) {
      for (const auto& x : r.outcome->replacements)
        *sinks.replacements << r.id << '\t' << x.token_index << '\t' << x.original << '\t' << x.substitute << '\t'
                            << to_string(x.relation) << '\n';
    }
    if (sinks.deletions) {
      for (const auto& d : r.outcome->deletions)
        *sinks.deletions << r.id << '\t' << d.span_start << '\t' << d.span_end << '\t' << d.node_label << '\n';
    }
  }
}

TransferSummary run_transfer(std::istream& treebank, const std::string& source_name, TransferId id,
                             const TransferContext& ctx, const TransferSinks& sinks, unsigned threads,
                             std::size_t batch_size) {
  TreebankReader reader(treebank, source_name);
  TransferSummary s;
  std::vector<CorpusItem> batch;
  bool more = true;
  while (more) {
    more = read_batch(reader, batch_size, batch);
    auto records = transfer_batch(batch, id, ctx, threads);
    for (const auto& r : records) ++(r.outcome ? s.applicable : s.inapplicable);
    write_records(records, sinks);
  }
  return s;
}

std::vector<std::optional<std::vector<ParallelPair>>> compose_batch(const std::vector<CorpusItem>& items,
                                                                    const std::vector<const Dimension*>& dims,
                                                                    const TransferContext& ctx,
                                                                    const GridOptions& options, unsigned threads) {
  using Result = std::optional<std::vector<ParallelPair>>;
  std::function<Result(std::size_t)> one = [&](std::size_t i) -> Result {
    try {
      return compose_grid(items[i].tree, dims, ctx, options);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NoApplicableTransfer) return std::nullopt;
      throw Error(e.code(), items[i].id + ": " + e.what());
    }
  };
  return parallel_map(items.size(), threads, one);
}

ComposeSummary run_compose(std::istream& treebank, const std::string& source_name,
                           const std::vector<const Dimension*>& dims, const TransferContext& ctx,
                           const GridOptions& options, std::ostream& pairs_out, unsigned threads,
                           std::size_t batch_size) {
  TreebankReader reader(treebank, source_name);
  ComposeSummary s;
  std::vector<CorpusItem> batch;
  bool more = true;
  while (more) {
    more = read_batch(reader, batch_size, batch);
    auto results = compose_batch(batch, dims, ctx, options, threads);
    for (const auto& r : results) {
      ++s.sentences;
      if (!r) {
        ++s.skipped;
        continue;
      }
      for (const auto& p : *r) pairs_out << format_pair(p) << '\n';
      s.pairs += r->size();
    }
  }
  return s;
}

ParallelPair parse_pair_line(std::string_view line, const std::string& where) {
  auto t1 = line.find('\t');
  auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
  if (t2 == std::string_view::npos || line.find('\t', t2 + 1) != std::string_view::npos)
    fail(ErrorCode::MalformedLine, where + ": expected 3 tab-separated fields");
  ParallelPair p;
  std::string label(line.substr(0, t1));
  std::size_t pos = 0;
  while (pos < label.size()) {
    auto end = label.find(' ', pos);
    if (end == std::string::npos) end = label.size();
    std::string tok = label.substr(pos, end - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      fail(ErrorCode::MalformedLine, where + ": bad label '" + label + "'");
    p.label.dims.push_back({"", std::stoi(tok)});
    pos = end + 1;
  }
  if (p.label.dims.empty()) fail(ErrorCode::MalformedLine, where + ": empty label");
  p.source = sentence_from_text(line.substr(t1 + 1, t2 - t1 - 1));
  p.target = sentence_from_text(line.substr(t2 + 1));
  return p;
}

std::vector<ParallelPair> read_pair_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::MissingFile, path);
  std::vector<ParallelPair> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_pair_line(line, path + ":" + std::to_string(n)));
  }
  return out;
}

}  // namespace finestyle
