#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <functional>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "finestyle/composition.hpp"
#include "finestyle/transfer.hpp"
#include "finestyle/tree.hpp"

namespace finestyle {

inline constexpr std::string_view kToolVersion = "0.1.0";

struct PipelineConfig {
  std::string lexicon_path;
  std::string frequency_path;
  std::string irregular_path;
  std::vector<std::string> transfers;
  std::vector<std::string> dimensions;
  SplitRatios ratios;
  std::uint64_t seed = 0;
  std::filesystem::path output_dir = ".";
  bool identity_pairs = false;
  unsigned threads = 1;

  // Canonical JSON of the fields that affect outputs (not threads).
  std::string canonical() const;
  // FNV-1a 64 of canonical(), as 16 hex digits.
  std::string hash() const;
};

std::uint64_t fnv1a64(std::string_view bytes);

// Writes manifest.json: tool, version, command, config hash, seed, config.
void write_manifest(const std::filesystem::path& dir, std::string_view command, const PipelineConfig& config);

// Runs fn(0..n-1) on a pool and returns the results in index order. The first
// exception thrown by any task is rethrown after all workers stop.
template <class R>
std::vector<R> parallel_map(std::size_t n, unsigned threads, const std::function<R(std::size_t)>& fn) {
  std::vector<std::optional<R>> slots(n);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    while (!stop) {
      std::size_t i = next++;
      if (i >= n) break;
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        stop = true;
      }
    }
  };
  unsigned t = std::max(1u, threads);
  if (t == 1 || n < 2) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < t; ++k) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

struct CorpusItem {
  std::string id;
  ParseTree tree;  // normalized
};

struct TransferRecord {
  std::string id;
  Sentence source;
  std::optional<TransferOutcome> outcome;  // empty when the transfer did not apply
  std::string skip_reason;
};

// Inapplicable and MissingAgent become skips; other errors propagate.
std::vector<TransferRecord> transfer_batch(const std::vector<CorpusItem>& items, TransferId id,
                                           const TransferContext& ctx, unsigned threads);

struct TransferSinks {
  std::ostream* pairs = nullptr;         // id, source, target
  std::ostream* replacements = nullptr;  // id, index, original, substitute, relation
  std::ostream* deletions = nullptr;     // id, span_start, span_end, node_label
};

struct TransferSummary {
  std::size_t applicable = 0;
  std::size_t inapplicable = 0;
};

void write_records(const std::vector<TransferRecord>& records, const TransferSinks& sinks);

// Streams a treebank in batches; output order follows input order.
TransferSummary run_transfer(std::istream& treebank, const std::string& source_name, TransferId id,
                             const TransferContext& ctx, const TransferSinks& sinks, unsigned threads,
                             std::size_t batch_size = 1024);

struct ComposeSummary {
  std::size_t sentences = 0;
  std::size_t skipped = 0;  // NoApplicableTransfer
  std::size_t pairs = 0;
};

// Grid pairs for each tree, in input order, or nullopt for a skipped tree.
std::vector<std::optional<std::vector<ParallelPair>>> compose_batch(const std::vector<CorpusItem>& items,
                                                                    const std::vector<const Dimension*>& dims,
                                                                    const TransferContext& ctx,
                                                                    const GridOptions& options, unsigned threads);

ComposeSummary run_compose(std::istream& treebank, const std::string& source_name,
                           const std::vector<const Dimension*>& dims, const TransferContext& ctx,
                           const GridOptions& options, std::ostream& pairs_out, unsigned threads,
                           std::size_t batch_size = 256);

// "label<TAB>source<TAB>target". Throws MalformedLine.
ParallelPair parse_pair_line(std::string_view line, const std::string& where);
std::vector<ParallelPair> read_pair_file(const std::string& path);

}  // namespace finestyle
