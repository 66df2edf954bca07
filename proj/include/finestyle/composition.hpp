#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finestyle/transfer.hpp"
#include "finestyle/tree.hpp"

namespace finestyle {

// One token per dimension, in dimension order. Rendered as space-separated
// integers ("2 1").
struct TransferLabel {
  std::vector<std::pair<std::string, int>> dims;

  std::string text() const;
  bool is_identity() const;
  friend bool operator==(const TransferLabel&, const TransferLabel&) = default;
};

// Parses the integer tokens of a label against the dimension names; checks
// each value against the dimension's range. Throws InvalidArgument.
TransferLabel parse_label(std::string_view text, const std::vector<const Dimension*>& dims);

struct ParallelPair {
  TransferLabel label;
  Sentence source;
  Sentence target;
};

struct GridOptions {
  bool include_identity = false;
};

// Every variant of the tree reachable by one token per dimension (applied in
// dimension order), paired with every nonzero label that applies to it.
// Throws NoApplicableTransfer when no nonzero label applies anywhere.
std::vector<ParallelPair> compose_grid(const ParseTree& tree, const std::vector<const Dimension*>& dims,
                                       const TransferContext& ctx, const GridOptions& options = {});

// Resolves dimension names in order. Throws UnknownTransfer.
std::vector<const Dimension*> dimensions_by_name(const std::vector<std::string>& names);

// Token of the transfer that undoes `id` on `tree`; voice and PP position
// swap direction, tense returns to the tree's own tense. Throws
// InvalidArgument for transfers with no inverse.
int inverse_token(TransferId id, const ParseTree& tree);

// Extends an externally annotated pair (sentence of `tree` -> annotated)
// with an automated transfer: the result maps auto(tree) to annotated and
// is labeled with the inverse of `auto_transfer` plus the annotated token.
// With no auto transfer the annotated pair is returned as is.
ParallelPair reverse_chain(const ParseTree& tree, const Sentence& annotated,
                           const std::pair<std::string, int>& annotated_dim,
                           std::optional<TransferId> auto_transfer, const TransferContext& ctx);

struct SplitRatios {
  double train = 0.90;
  double valid = 0.05;
  double test = 0.05;
};

// Throws InvalidArgument unless all three are positive and sum to 1.
SplitRatios parse_ratios(std::string_view text);

struct DatasetSplit {
  std::vector<ParallelPair> train, valid, test;
};

// Seeded shuffle, floor-exact valid/test sizes, remainder to train.
// Throws EmptyInput.
DatasetSplit split_pairs(std::vector<ParallelPair> pairs, const SplitRatios& ratios, std::uint64_t seed);

std::string format_pair(const ParallelPair& pair);

// Writes train.tsv, valid.tsv, test.tsv and split_manifest.json under dir,
// with numerals replaced. Returns the split that was written.
DatasetSplit emit_dataset(std::vector<ParallelPair> pairs, const SplitRatios& ratios, std::uint64_t seed,
                          const std::filesystem::path& dir);

}  // namespace finestyle
