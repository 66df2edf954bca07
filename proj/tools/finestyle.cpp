#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "finestyle/analysis.hpp"
#include "finestyle/composition.hpp"
#include "finestyle/error.hpp"
#include "finestyle/lexicon.hpp"
#include "finestyle/metrics.hpp"
#include "finestyle/morphology.hpp"
#include "finestyle/pipeline.hpp"
#include "finestyle/transfer.hpp"
#include "finestyle/tree.hpp"

namespace fs = std::filesystem;
using namespace finestyle;

namespace {

struct Common {
  std::string lexicon;
  std::string frequency;
  std::string irregular;
  std::string out = ".";
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

// Resources shared by the transfer-running commands.
struct Engine {
  std::optional<Lexicon> lexicon;
  std::unique_ptr<Morphology> morph;
  TransferContext ctx;

  explicit Engine(const Common& c) {
    if (!c.irregular.empty()) {
      morph = std::make_unique<Morphology>(IrregularTable::load(c.irregular));
      ctx.morph = morph.get();
    }
    if (!c.lexicon.empty()) {
      lexicon = load_lexicon(c.lexicon);
      if (!c.frequency.empty()) lexicon->set_frequencies(load_frequency(c.frequency));
      ctx.lexicon = &*lexicon;
    } else if (!c.frequency.empty()) {
      fail(ErrorCode::InvalidArgument, "--frequency needs --lexicon");
    }
  }
};

PipelineConfig base_config(const Common& c) {
  PipelineConfig cfg;
  cfg.lexicon_path = c.lexicon;
  cfg.frequency_path = c.frequency;
  cfg.irregular_path = c.irregular;
  cfg.output_dir = c.out;
  cfg.threads = c.threads;
  return cfg;
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) fail(ErrorCode::Io, p.string() + ": cannot open for writing");
  return out;
}

std::ifstream open_in(const std::string& p) {
  std::ifstream in(p);
  if (!in) fail(ErrorCode::MissingFile, p);
  return in;
}

std::vector<Sentence> read_sentences(const std::string& path) {
  auto in = open_in(path);
  std::vector<Sentence> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(sentence_from_text(line));
  }
  return out;
}

int cmd_import_wordnet(const std::string& dict, const std::string& output, const std::string& corpus,
                       const std::string& freq_out) {
  Lexicon lex = import_wordnet(dict);
  auto out = open_out(output);
  write_lexicon(lex, out);
  std::cerr << "imported " << lex.lemma_count() << " lemmas to " << output << '\n';
  if (!corpus.empty()) {
    if (freq_out.empty()) fail(ErrorCode::InvalidArgument, "--corpus needs --frequency-output");
    std::vector<ParseTree> trees;
    for (const auto& t : read_treebank_file(corpus)) trees.push_back(normalize_tree(t));
    auto fo = open_out(freq_out);
    write_frequency(build_frequency(trees, Morphology::english()), fo);
  }
  return 0;
}

int cmd_filter(const std::vector<std::string>& inputs, const std::string& output, const std::string& sentences) {
  auto out = open_out(output);
  std::optional<std::ofstream> sout;
  if (!sentences.empty()) sout = open_out(sentences);
  std::size_t total = 0, kept = 0;
  for (const auto& path : inputs) {
    auto in = open_in(path);
    TreebankReader reader(in, fs::path(path).filename().string());
    while (auto t = reader.next()) {
      ++total;
      ParseTree norm;
      try {
        norm = normalize_tree(*t);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::EmptySentence && e.code() != ErrorCode::EmptyNode) throw;
        continue;
      }
      if (filter_corpus({norm}).empty()) continue;
      ++kept;
      out << serialize(norm) << '\n';
      if (sout) *sout << replace_numerals(extract_sentence(norm)).text() << '\n';
    }
  }
  std::cerr << "kept " << kept << " of " << total << " trees\n";
  return 0;
}

int cmd_transfer(const Common& c, const std::string& style, const std::string& input) {
  Engine engine(c);
  std::vector<TransferId> ids;
  if (style == "all") {
    for (const auto& t : transfer_catalog()) {
      if (!t.needs_lexicon || engine.ctx.lexicon) ids.push_back(t.id);
    }
  } else {
    ids.push_back(transfer_by_name(style));
  }
  fs::create_directories(c.out);
  PipelineConfig cfg = base_config(c);
  for (auto id : ids) cfg.transfers.emplace_back(transfer_info(id).name);
  for (auto id : ids) {
    std::string name(transfer_info(id).name);
    auto in = open_in(input);
    auto pairs = open_out(fs::path(c.out) / (name + ".pairs.tsv"));
    std::optional<std::ofstream> reps, dels;
    TransferSinks sinks{&pairs, nullptr, nullptr};
    if (transfer_info(id).needs_lexicon) {
      reps = open_out(fs::path(c.out) / (name + ".replacements.tsv"));
      sinks.replacements = &*reps;
    }
    if (transfer_info(id).family.ends_with("removal")) {
      dels = open_out(fs::path(c.out) / (name + ".deletions.tsv"));
      sinks.deletions = &*dels;
    }
    auto s = run_transfer(in, fs::path(input).filename().string(), id, engine.ctx, sinks, c.threads);
    std::cout << name << "\tapplicable " << s.applicable << "\tinapplicable " << s.inapplicable << '\n';
  }
  write_manifest(c.out, "transfer", cfg);
  return 0;
}

int cmd_compose(const Common& c, const std::string& dims_text, const std::string& input, bool identity) {
  Engine engine(c);
  std::vector<std::string> names;
  for (std::size_t pos = 0; pos <= dims_text.size();) {
    auto end = dims_text.find(',', pos);
    if (end == std::string::npos) end = dims_text.size();
    if (end > pos) names.push_back(dims_text.substr(pos, end - pos));
    pos = end + 1;
  }
  if (names.empty()) fail(ErrorCode::InvalidArgument, "--dims is empty");
  auto dims = dimensions_by_name(names);
  for (const auto* d : dims) {
    for (auto id : d->tokens) {
      if (transfer_info(id).needs_lexicon && !engine.ctx.lexicon)
        fail(ErrorCode::InvalidArgument, "dimension " + std::string(d->name) + " needs --lexicon");
    }
  }
  fs::create_directories(c.out);
  PipelineConfig cfg = base_config(c);
  cfg.dimensions = names;
  cfg.identity_pairs = identity;
  auto in = open_in(input);
  auto out = open_out(fs::path(c.out) / "pairs.tsv");
  auto s = run_compose(in, fs::path(input).filename().string(), dims, engine.ctx, GridOptions{identity}, out,
                       c.threads);
  if (s.sentences == 0) std::cerr << "warning: empty corpus, no pairs written\n";
  std::cout << "sentences " << s.sentences << "\tskipped " << s.skipped << "\tpairs " << s.pairs << '\n';
  write_manifest(c.out, "compose", cfg);
  return 0;
}

int cmd_split(const Common& c, const std::vector<std::string>& inputs, const std::string& ratios_text,
              std::uint64_t seed) {
  std::vector<ParallelPair> pairs;
  for (const auto& p : inputs) {
    auto part = read_pair_file(p);
    pairs.insert(pairs.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  PipelineConfig cfg = base_config(c);
  cfg.ratios = parse_ratios(ratios_text);
  cfg.seed = seed;
  auto split = emit_dataset(std::move(pairs), cfg.ratios, seed, c.out);
  write_manifest(c.out, "split", cfg);
  std::cout << "train " << split.train.size() << "\tvalid " << split.valid.size() << "\ttest " << split.test.size()
            << '\n';
  return 0;
}

int cmd_stats(const std::string& input, bool sentences, std::size_t top, const std::string& format,
              const std::string& csv) {
  CorpusStats s;
  if (sentences) {
    s = corpus_stats(read_sentences(input), top);
  } else {
    std::vector<ParseTree> trees;
    for (const auto& t : read_treebank_file(input)) trees.push_back(normalize_tree(t));
    s = corpus_stats(trees, top);
  }
  std::cout << (format == "json" ? to_json(s) + "\n" : format_table(s));
  if (!csv.empty()) open_out(csv) << histogram_csv(s);
  return 0;
}

int cmd_hamming(const std::vector<std::string>& inputs, const std::string& format) {
  std::vector<DifficultyReport> reports;
  for (const auto& path : inputs) {
    auto in = open_in(path);
    std::vector<std::pair<Sentence, Sentence>> pairs;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
      ++n;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      auto t2 = line.rfind('\t');
      auto t1 = t2 == std::string::npos || t2 == 0 ? std::string::npos : line.rfind('\t', t2 - 1);
      std::string src = t1 == std::string::npos ? line.substr(0, t2) : line.substr(t1 + 1, t2 - t1 - 1);
      if (t2 == std::string::npos)
        fail(ErrorCode::MalformedLine, path + ":" + std::to_string(n) + ": expected source and target columns");
      pairs.push_back({sentence_from_text(src), sentence_from_text(line.substr(t2 + 1))});
    }
    std::string name = fs::path(path).filename().string();
    if (auto p = name.find(".pairs"); p != std::string::npos) name = name.substr(0, p);
    reports.push_back(difficulty_report(name, pairs));
  }
  if (format == "json") {
    for (const auto& r : reports) std::cout << to_json_line(r) << '\n';
  } else {
    std::cout << format_table(reports);
  }
  return 0;
}

int cmd_score(const std::string& metric, const std::string& cand_path, const std::string& ref_path, int max_n,
              const std::string& format) {
  auto cands = read_sentences(cand_path);
  auto refs = read_sentences(ref_path);
  if (metric == "bleu") {
    auto b = bleu_detail(cands, refs, max_n);
    std::cout << "BLEU-" << max_n << ' ' << b.score << '\n';
    if (!b.zero_orders.empty()) {
      std::cout << "zero matches at order";
      for (int o : b.zero_orders) std::cout << ' ' << o;
      std::cout << '\n';
    }
  } else if (metric == "rougeL") {
    std::cout << "ROUGE-L " << rouge_l(cands, refs) << '\n';
  } else {
    auto r = score(cands, refs);
    std::cout << (format == "json" ? to_json(r) + "\n" : format_table(r));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fine-grained style transfer dataset toolkit"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  Common c;
  app.add_option("--lexicon", c.lexicon, "Lexicon TSV (lemma, class, relation, target)")->envname("FINESTYLE_LEXICON");
  app.add_option("--frequency", c.frequency, "Frequency TSV (lemma, count)")->envname("FINESTYLE_FREQUENCY");
  app.add_option("--irregular-verbs", c.irregular, "Irregular verb TSV replacing the built-in table");
  app.add_option("-o,--out", c.out, "Output directory");
  app.add_option("-j,--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);

  std::string dict, output, corpus, freq_out;
  auto* wn = app.add_subcommand("import-wordnet", "Convert a WordNet dict directory to a lexicon TSV");
  wn->add_option("--dict", dict, "WordNet dict directory")->required();
  wn->add_option("--output", output, "Lexicon TSV to write")->required();
  wn->add_option("--corpus", corpus, "Treebank whose lemma counts become the frequency table");
  wn->add_option("--frequency-output", freq_out, "Frequency TSV to write");

  std::vector<std::string> inputs;
  std::string sentences;
  auto* filter = app.add_subcommand("filter", "Normalize and keep 5-12 token complete sentences");
  filter->add_option("inputs", inputs, "Treebank files")->required()->check(CLI::ExistingFile);
  filter->add_option("--output", output, "Filtered trees, one per line")->required();
  filter->add_option("--sentences", sentences, "Also write the sentences, numerals replaced");

  std::string style, input;
  auto* transfer = app.add_subcommand("transfer", "Apply one transfer (or all) to a treebank");
  transfer->add_option("--style", style, "Transfer name or 'all'")->required();
  transfer->add_option("input", input, "Treebank file")->required()->check(CLI::ExistingFile);

  std::string dims;
  bool identity = false;
  auto* compose = app.add_subcommand("compose", "Generate labeled pairs over composed dimensions");
  compose->add_option("--dims", dims, "Comma-separated dimensions, e.g. tense,voice")->required();
  compose->add_option("input", input, "Treebank file")->required()->check(CLI::ExistingFile);
  compose->add_flag("--identity", identity, "Also emit all-zero identity pairs");

  std::string ratios = "90,5,5";
  std::uint64_t seed = 0;
  auto* split = app.add_subcommand("split", "Shuffle pair files into train/valid/test");
  split->add_option("inputs", inputs, "Pair TSV files")->required()->check(CLI::ExistingFile);
  split->add_option("--ratios", ratios, "train,valid,test")->capture_default_str();
  split->add_option("--seed", seed, "Shuffle seed")->required();

  bool plain = false;
  std::size_t top = 10;
  std::string format = "table", csv;
  auto* stats = app.add_subcommand("stats", "Corpus statistics");
  stats->add_option("input", input, "Treebank file (or sentences with --sentences)")->required()->check(CLI::ExistingFile);
  stats->add_flag("--sentences", plain, "Input is one sentence per line");
  stats->add_option("--top", top, "Number of most frequent tokens")->capture_default_str();
  stats->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
  stats->add_option("--histogram-csv", csv, "Write the length histogram as CSV");

  auto* ham = app.add_subcommand("hamming", "Mean token Hamming distance and tier per pair file");
  ham->add_option("inputs", inputs, "Pair TSV files; last two columns are source and target")
      ->required()
      ->check(CLI::ExistingFile);
  ham->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

  std::string metric = "all", cands, refs;
  int max_n = 4;
  auto* sc = app.add_subcommand("score", "BLEU and ROUGE-L of candidates against references");
  sc->add_option("--metric", metric, "bleu, rougeL or all")->check(CLI::IsMember({"bleu", "rougeL", "all"}));
  sc->add_option("--candidates", cands, "One sentence per line")->required()->check(CLI::ExistingFile);
  sc->add_option("--references", refs, "One sentence per line")->required()->check(CLI::ExistingFile);
  sc->add_option("--max-n", max_n, "BLEU order")->check(CLI::Range(1, 4));
  sc->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*wn) return cmd_import_wordnet(dict, output, corpus, freq_out);
    if (*filter) return cmd_filter(inputs, output, sentences);
    if (*transfer) return cmd_transfer(c, style, input);
    if (*compose) return cmd_compose(c, dims, input, identity);
    if (*split) return cmd_split(c, inputs, ratios, seed);
    if (*stats) return cmd_stats(input, plain, top, format, csv);
    if (*ham) return cmd_hamming(inputs, format);
    if (*sc) return cmd_score(metric, cands, refs, max_n, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
