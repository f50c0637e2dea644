#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11/CLI11.hpp"
#include "toksmith/adapt.hpp"
#include "toksmith/corpus.hpp"
#include "toksmith/costmodel.hpp"
#include "toksmith/error.hpp"
#include "toksmith/healing.hpp"
#include "toksmith/metrics.hpp"
#include "toksmith/persistence.hpp"
#include "toksmith/trainer.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace toksmith {
namespace {

struct Globals {
  std::uint64_t seed = 0;
  unsigned threads = 0;

  unsigned thread_count() const {
    if (threads > 0) return threads;
    return std::max(1u, std::thread::hardware_concurrency());
  }
};

// Options shared by every command that trains from a manifest.
struct TrainingInputs {
  std::string manifest;
  std::string mix;
  std::size_t chars = 1'000'000;
  std::string scheme = "gpt4";
  std::string pattern;
};

void add_training_inputs(CLI::App& cmd, TrainingInputs& in, bool with_mix = true) {
  cmd.add_option("--manifest", in.manifest, "Corpus manifest (JSON)")->required();
  if (with_mix) {
    cmd.add_option("--mix", in.mix, "Category weights, e.g. code=0.7,english=0.3 (default: equal)");
  }
  cmd.add_option("--chars", in.chars, "Training character budget")->capture_default_str();
  cmd.add_option("--scheme", in.scheme, "Pre-tokenizer: identity, gpt2, gpt4, punct, custom")
      ->capture_default_str();
  cmd.add_option("--pattern", in.pattern, "Regex for the custom scheme");
}

PretokenizerSpec make_spec(const TrainingInputs& in) {
  return PretokenizerSpec(parse_scheme(in.scheme), in.pattern);
}

MixSpec make_mix(const CorpusManifest& manifest, const std::string& text, std::size_t chars) {
  MixSpec mix;
  mix.char_budget = chars;
  if (text.empty()) {
    const double w = 1.0 / static_cast<double>(manifest.categories().size());
    for (const auto& c : manifest.categories()) mix.weights[c.name] = w;
  } else {
    mix.weights = parse_weights(text);
  }
  mix.validate();
  return mix;
}

std::string mix_label(const MixSpec& mix) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, w] : mix.weights) {
    out << (first ? "" : ",") << name << "=" << w;
    first = false;
  }
  return out.str();
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Trains on a sampled mix. With TOKSMITH_CACHE_DIR set, results are stored
// under a key covering every input that affects the merges.
Tokenizer train_mix(const CorpusManifest& manifest, const fs::path& manifest_path,
                    const MixSpec& mix, const PretokenizerSpec& spec, std::size_t vocab,
                    const Globals& g) {
  std::optional<fs::path> cached;
  if (const char* dir = std::getenv("TOKSMITH_CACHE_DIR"); dir && *dir) {
    std::ostringstream key;
    key << "v1|" << fs::absolute(manifest_path).string() << "|" << read_file(manifest_path)
        << "|" << mix_label(mix) << "|" << mix.char_budget << "|" << spec.name() << "|"
        << spec.pattern() << "|" << vocab << "|" << g.seed;
    std::ostringstream name;
    name << "tok-" << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key.str())
         << ".json";
    cached = fs::path(dir) / name.str();
    if (fs::exists(*cached)) return load_tokenizer(*cached);
  }
  MixSampler sampler(manifest, mix, g.seed);
  Tokenizer tok = train(spec, sampler.source(),
                        {.target_vocab = vocab, .char_budget = std::nullopt, .threads = g.thread_count()});
  if (cached) {
    fs::create_directories(cached->parent_path());
    save_tokenizer(tok, *cached);
  }
  return tok;
}

std::vector<std::string> category_holdout(const CorpusManifest& manifest, const std::string& name) {
  const Category* c = manifest.find(name);
  if (!c) throw ConfigError("category '" + name + "' is not in the manifest");
  std::vector<std::string> docs;
  for (const auto& s : c->subsets) {
    auto part = read_documents(s.holdout_files());
    std::move(part.begin(), part.end(), std::back_inserter(docs));
  }
  if (docs.empty()) throw ValidationError("category '" + name + "' has no holdout documents");
  return docs;
}

Tokenizer baseline_or_bytes(const std::string& path) {
  return path.empty() ? Tokenizer() : load_tokenizer(path);
}

std::string read_stdin() {
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_file(path, text);
  }
}

std::string fixed(double v, int digits) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << v;
  return out.str();
}

// ---- train ---------------------------------------------------------------

struct TrainArgs {
  TrainingInputs in;
  std::size_t vocab = 8000;
  std::string out;
};

void run_train(const TrainArgs& a, const Globals& g) {
  const auto manifest = CorpusManifest::load(a.in.manifest);
  const auto mix = make_mix(manifest, a.in.mix, a.in.chars);
  const Tokenizer tok = train_mix(manifest, a.in.manifest, mix, make_spec(a.in), a.vocab, g);
  save_tokenizer(tok, a.out);
  std::cout << "trained " << tok.spec().name() << " tokenizer: vocab " << tok.vocab_size()
            << ", merges " << tok.merges().size() << " -> " << a.out << "\n";
}

// ---- mix-sweep -----------------------------------------------------------

struct MixSweepArgs {
  TrainingInputs in;
  std::vector<std::string> mixes;
  std::size_t vocab = 8000;
  std::string baseline;
  std::string out;
};

void run_mix_sweep(const MixSweepArgs& a, const Globals& g) {
  const auto manifest = CorpusManifest::load(a.in.manifest);
  const auto spec = make_spec(a.in);
  const Tokenizer baseline = baseline_or_bytes(a.baseline);
  std::vector<MixSpec> mixes;
  for (const auto& m : a.mixes) mixes.push_back(make_mix(manifest, m, a.in.chars));

  std::vector<NamedTokenizer> toks;
  for (const auto& mix : mixes) {
    toks.push_back({mix_label(mix), train_mix(manifest, a.in.manifest, mix, spec, a.vocab, g)});
  }
  const auto reports = evaluate(toks, baseline, manifest, g.thread_count());

  json rows = json::array();
  std::cout << std::left << std::setw(32) << "mix";
  for (const auto& c : manifest.categories()) std::cout << std::right << std::setw(14) << c.name;
  std::cout << "\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    json nsl = json::object();
    std::cout << std::left << std::setw(32) << reports[i].name;
    for (const auto& c : manifest.categories()) {
      const double v = reports[i].per_category.at(c.name).nsl;
      nsl[c.name] = v;
      std::cout << std::right << std::setw(14) << fixed(v, 3);
    }
    std::cout << "\n";
    rows.push_back({{"mix", mixes[i].weights}, {"nsl", nsl}});
  }
  if (!a.out.empty()) write_file(a.out, json{{"rows", rows}}.dump(2) + "\n");
}

// ---- vocab-sweep ---------------------------------------------------------

struct VocabSweepArgs {
  TrainingInputs in;
  std::vector<std::size_t> vocabs;
  std::size_t anchor = NslCurve::kDefaultAnchor;
  std::string category = "code";
  std::string baseline;
  std::string out;
};

void run_vocab_sweep(const VocabSweepArgs& a, const Globals& g) {
  std::vector<std::size_t> vocabs = a.vocabs;
  std::sort(vocabs.begin(), vocabs.end());
  vocabs.erase(std::unique(vocabs.begin(), vocabs.end()), vocabs.end());
  if (vocabs.empty()) throw ConfigError("--vocabs is empty");
  if (!std::binary_search(vocabs.begin(), vocabs.end(), a.anchor)) {
    throw ConfigError("--anchor " + std::to_string(a.anchor) + " is not one of --vocabs");
  }
  const auto manifest = CorpusManifest::load(a.in.manifest);
  const auto mix = make_mix(manifest, a.in.mix, a.in.chars);
  const Tokenizer largest =
      train_mix(manifest, a.in.manifest, mix, make_spec(a.in), vocabs.back(), g);
  if (largest.vocab_size() < vocabs.back()) {
    throw TrainingError("corpus supports only " + std::to_string(largest.vocab_size()) +
                        " tokens, below the requested " + std::to_string(vocabs.back()));
  }
  const Tokenizer baseline = baseline_or_bytes(a.baseline);
  const auto docs = category_holdout(manifest, a.category);

  std::vector<double> raw;
  for (const std::size_t v : vocabs) {
    if (v < kByteVocabSize) throw ConfigError("vocab sizes must be at least 256");
    raw.push_back(nsl(largest.truncated(v - kByteVocabSize), baseline, docs));
  }
  const double at_anchor =
      raw[std::lower_bound(vocabs.begin(), vocabs.end(), a.anchor) - vocabs.begin()];
  std::vector<std::pair<std::size_t, double>> points;
  std::cout << std::setw(10) << "vocab" << std::setw(12) << "nsl" << std::setw(12) << "nsl@anchor"
            << "\n";
  for (std::size_t i = 0; i < vocabs.size(); ++i) {
    const double norm = vocabs[i] == a.anchor ? 1.0 : raw[i] / at_anchor;
    points.emplace_back(vocabs[i], norm);
    std::cout << std::setw(10) << vocabs[i] << std::setw(12) << fixed(raw[i], 4) << std::setw(12)
              << fixed(norm, 4) << "\n";
  }
  const NslCurve curve(points, a.anchor);
  write_file(a.out, curve.to_json());
}

// ---- eval ----------------------------------------------------------------

struct EvalArgs {
  std::string manifest;
  std::string baseline;
  std::vector<std::string> toks;
  double alpha = kDefaultRenyiAlpha;
  std::string json_out;
};

void run_eval(const EvalArgs& a, const Globals& g) {
  const auto manifest = CorpusManifest::load(a.manifest);
  const Tokenizer baseline = load_tokenizer(a.baseline);
  std::vector<NamedTokenizer> toks;
  for (const auto& entry : a.toks) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos) {
      toks.push_back({fs::path(entry).stem().string(), load_tokenizer(entry)});
    } else {
      toks.push_back({entry.substr(0, eq), load_tokenizer(entry.substr(eq + 1))});
    }
  }
  const auto reports = evaluate(toks, baseline, manifest, g.thread_count(), a.alpha);
  std::cout << report_table(reports);
  if (!a.json_out.empty()) write_file(a.json_out, report_json(reports));
}

// ---- optimize-memory / optimize-inference --------------------------------

struct MemoryArgs {
  ModelArch arch;
  std::int64_t batch = 1;
  std::int64_t seqlen = 1000;
  std::string curve;
  std::vector<std::size_t> grid;
  std::string json_out;
};

std::vector<std::size_t> grid_or_knots(const std::vector<std::size_t>& grid, const NslCurve& curve) {
  if (!grid.empty()) return grid;
  std::vector<std::size_t> out;
  for (const auto& p : curve.points()) out.push_back(p.first);
  return out;
}

void run_optimize_memory(const MemoryArgs& a) {
  const NslCurve curve = NslCurve::parse(read_file(a.curve));
  const auto grid = grid_or_knots(a.grid, curve);
  const auto r = memory_optimal(a.arch, a.batch, a.seqlen, curve, grid);
  std::cout << std::setw(10) << "vocab" << std::setw(18) << "embed" << std::setw(18) << "cache"
            << std::setw(18) << "total" << "\n";
  json rows = json::array();
  for (const auto& row : r.table) {
    std::cout << std::setw(10) << row.vocab << std::setw(18) << fixed(row.embed, 0)
              << std::setw(18) << fixed(row.cache, 0) << std::setw(18) << fixed(row.total, 0)
              << "\n";
    rows.push_back({{"vocab", row.vocab}, {"embed", row.embed}, {"cache", row.cache},
                    {"total", row.total}});
  }
  std::cout << "best_vocab: " << r.best_vocab << "\n";
  if (!a.json_out.empty()) {
    write_file(a.json_out, json{{"best_vocab", r.best_vocab}, {"table", rows}}.dump(2) + "\n");
  }
}

struct InferenceArgs {
  std::string observations;
  std::string curve;
  std::vector<std::size_t> grid;
  std::string json_out;
};

void run_optimize_inference(const InferenceArgs& a) {
  const NslCurve curve = NslCurve::parse(read_file(a.curve));
  const auto obs = parse_observations(read_file(a.observations));
  const auto grid = grid_or_knots(a.grid, curve);
  json models = json::object();
  for (const auto& opt : inference_optimal(obs, curve, grid)) {
    std::cout << "model " << opt.model << ": time = " << opt.fit.intercept << " + "
              << opt.fit.slope << " * v\n";
    std::cout << std::setw(10) << "vocab" << std::setw(10) << "nsl" << std::setw(12) << "time"
              << std::setw(10) << "cost" << "\n";
    json rows = json::array();
    for (const auto& row : opt.table) {
      std::cout << std::setw(10) << row.vocab << std::setw(10) << fixed(row.nsl, 4)
                << std::setw(12) << fixed(row.time_norm, 4) << std::setw(10)
                << fixed(row.cost, 4) << "\n";
      rows.push_back({{"vocab", row.vocab}, {"nsl", row.nsl}, {"time_norm", row.time_norm},
                      {"cost", row.cost}});
    }
    std::cout << "best_vocab: " << opt.best_vocab << "\n";
    models[opt.model] = {{"intercept", opt.fit.intercept}, {"slope", opt.fit.slope},
                         {"best_vocab", opt.best_vocab}, {"table", rows}};
  }
  if (!a.json_out.empty()) write_file(a.json_out, json{{"models", models}}.dump(2) + "\n");
}

// ---- merge / fvt ---------------------------------------------------------

struct MergeArgs {
  std::string base;
  std::string domain;
  std::string filter = "gpt4";
  std::string pattern;
  std::string out;
};

void run_merge(const MergeArgs& a) {
  const Tokenizer base = load_tokenizer(a.base);
  const Tokenizer domain = load_tokenizer(a.domain);
  const Tokenizer merged =
      merge_tokenizers(base, domain, PretokenizerSpec(parse_scheme(a.filter), a.pattern));
  save_tokenizer(merged, a.out);
  std::cout << "merged vocab " << merged.vocab_size() << " (base " << base.vocab_size()
            << ", appended " << merged.vocab_size() - base.vocab_size() << ") -> " << a.out
            << "\n";
}

struct FvtArgs {
  std::string old_tok;
  std::string new_tok;
  std::string old_emb;
  std::string out_emb;
};

void run_fvt(const FvtArgs& a) {
  const Tokenizer old_tok = load_tokenizer(a.old_tok);
  const Tokenizer new_tok = load_tokenizer(a.new_tok);
  const EmbeddingMatrix out = fvt_transfer(old_tok, new_tok, load_embeddings(a.old_emb));
  save_embeddings(out, a.out_emb);
  std::cout << "wrote " << out.rows() << "x" << out.cols() << " embeddings -> " << a.out_emb
            << "\n";
}

// ---- heal / encode / decode ----------------------------------------------

struct HealArgs {
  std::string tok;
  std::string prompt;
  std::string strategy = "nstep";
  std::string scorer = "uniform";
};

void run_heal(const HealArgs& a) {
  const Tokenizer tok = load_tokenizer(a.tok);
  std::unique_ptr<Scorer> scorer;
  if (a.scorer == "uniform") {
    scorer = std::make_unique<UniformScorer>(tok.vocab_size());
  } else if (a.scorer.starts_with("ngram:")) {
    scorer = std::make_unique<NgramScorer>(tok, read_file(a.scorer.substr(6)));
  } else {
    throw ConfigError("unknown scorer '" + a.scorer + "' (expected uniform or ngram:FILE)");
  }
  const auto result = heal(tok, a.prompt, *scorer, parse_strategy(a.strategy));
  if (result.fell_back) std::cerr << "warning: no healing candidates, fell back to none\n";
  std::cout << healing_result_json(tok, result);
}

struct EncodeArgs {
  std::string tok;
  std::optional<std::string> text;
  double dropout = 0.0;
};

void run_encode(const EncodeArgs& a, const Globals& g) {
  const Tokenizer tok = load_tokenizer(a.tok);
  const std::string text = a.text ? *a.text : read_stdin();
  std::optional<DropoutPolicy> policy;
  if (a.dropout > 0.0) policy = DropoutPolicy{a.dropout, g.seed};
  const auto ids = tok.encode(text, policy);
  for (std::size_t i = 0; i < ids.size(); ++i) std::cout << (i ? " " : "") << ids[i];
  std::cout << "\n";
}

struct DecodeArgs {
  std::string tok;
  std::optional<std::string> ids;
};

void run_decode(const DecodeArgs& a) {
  const Tokenizer tok = load_tokenizer(a.tok);
  std::istringstream in(a.ids ? *a.ids : read_stdin());
  std::vector<TokenId> ids;
  std::string word;
  while (in >> word) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(word, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != word.size() || word.front() == '-' || v > UINT32_MAX) {
      throw ParseError("ids[" + std::to_string(ids.size()) + "]: '" + word +
                       "' is not a token id");
    }
    ids.push_back(static_cast<TokenId>(v));
  }
  std::cout << tok.decode(ids);
}

// ---- bench-proxy ---------------------------------------------------------

struct BenchArgs {
  std::int64_t dim = 256;
  std::int64_t layers = 4;
  std::vector<std::size_t> vocabs = {8000, 16000, 32000, 64000};
  int repeats = 3;
  std::string label = "proxy";
  std::string out;
};

void run_bench(const BenchArgs& a) {
  InferenceObservations obs;
  auto& series = obs[a.label];
  std::cout << "# proxy timing: CPU matrix multiplies, not a model benchmark\n";
  for (const std::size_t v : a.vocabs) {
    const double t = proxy_step_time(a.dim, a.layers, v, a.repeats);
    series.emplace_back(v, t);
    std::cout << std::setw(10) << v << std::setw(14) << fixed(t, 6) << "\n";
  }
  write_or_print(a.out, observations_to_json(obs));
}

int run(int argc, char** argv) {
  CLI::App app{"toksmith: train, evaluate and adapt byte-level BPE tokenizers"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML or INI file with option values; flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.option_defaults()->always_capture_default();

  Globals g;
  app.add_option("--seed", g.seed, "Seed for sampling and dropout");
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores)");

  auto sub = [&](const char* name, const char* help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->allow_config_extras(CLI::config_extras_mode::error);
    return cmd;
  };

  TrainArgs train_a;
  CLI::App* train_cmd = sub("train", "Train a tokenizer on a sampled corpus mix");
  add_training_inputs(*train_cmd, train_a.in);
  train_cmd->add_option("--vocab", train_a.vocab, "Target vocabulary size");
  train_cmd->add_option("--out", train_a.out, "Output tokenizer file")->required();

  MixSweepArgs mix_a;
  CLI::App* mix_cmd = sub("mix-sweep", "Train one tokenizer per mix and report per-category NSL");
  add_training_inputs(*mix_cmd, mix_a.in, false);
  mix_cmd->add_option("--mix", mix_a.mixes, "Mix to train (repeatable)")->required();
  mix_cmd->add_option("--vocab", mix_a.vocab, "Target vocabulary size");
  mix_cmd->add_option("--baseline", mix_a.baseline, "Baseline tokenizer (default: raw bytes)");
  mix_cmd->add_option("--out", mix_a.out, "JSON report");

  VocabSweepArgs sweep_a;
  CLI::App* sweep_cmd = sub("vocab-sweep", "Write an NSL-vs-vocab curve from one training run");
  add_training_inputs(*sweep_cmd, sweep_a.in);
  sweep_cmd->add_option("--vocabs", sweep_a.vocabs, "Vocabulary sizes")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--anchor", sweep_a.anchor, "Vocab size normalized to 1.0");
  sweep_cmd->add_option("--category", sweep_a.category, "Category whose holdout is measured");
  sweep_cmd->add_option("--baseline", sweep_a.baseline, "Baseline tokenizer (default: raw bytes)");
  sweep_cmd->add_option("--out", sweep_a.out, "Output curve file")->required();

  EvalArgs eval_a;
  CLI::App* eval_cmd = sub("eval", "Compression and Renyi report on holdout subsets");
  eval_cmd->add_option("--manifest", eval_a.manifest, "Corpus manifest")->required();
  eval_cmd->add_option("--baseline", eval_a.baseline, "Baseline tokenizer")->required();
  eval_cmd->add_option("--tok", eval_a.toks, "Tokenizer file or name=file (repeatable)")
      ->required();
  eval_cmd->add_option("--alpha", eval_a.alpha, "Renyi order");
  eval_cmd->add_option("--json", eval_a.json_out, "Also write the report as JSON");

  MemoryArgs mem_a;
  CLI::App* mem_cmd = sub("optimize-memory", "Memory-optimal vocabulary size");
  auto add_arch = [](CLI::App* cmd, ModelArch& arch) {
    cmd->add_option("--dim", arch.dim, "Hidden size")->required();
    cmd->add_option("--layers", arch.n_layers, "Layer count")->required();
    cmd->add_option("--heads", arch.n_heads, "Attention heads")->required();
    cmd->add_option("--kv-heads", arch.n_kv_heads, "Key/value heads (default: --heads)");
    cmd->add_flag("--tied", arch.tied_embeddings, "Input and output embeddings are shared");
  };
  add_arch(mem_cmd, mem_a.arch);
  mem_cmd->add_option("--batch", mem_a.batch, "Batch size");
  mem_cmd->add_option("--seqlen-32k", mem_a.seqlen, "Sequence length at the anchor vocab");
  mem_cmd->add_option("--curve", mem_a.curve, "NSL curve file")->required();
  mem_cmd->add_option("--grid", mem_a.grid, "Candidate vocab sizes (default: curve knots)")
      ->delimiter(',');
  mem_cmd->add_option("--json", mem_a.json_out, "Also write the table as JSON");

  InferenceArgs inf_a;
  CLI::App* inf_cmd = sub("optimize-inference", "Inference-optimal vocabulary size per model");
  inf_cmd->add_option("--observations", inf_a.observations, "Timing observations file")
      ->required();
  inf_cmd->add_option("--curve", inf_a.curve, "NSL curve file")->required();
  inf_cmd->add_option("--grid", inf_a.grid, "Candidate vocab sizes (default: curve knots)")
      ->delimiter(',');
  inf_cmd->add_option("--json", inf_a.json_out, "Also write the tables as JSON");

  MergeArgs merge_a;
  CLI::App* merge_cmd = sub("merge", "Extend a base tokenizer with filtered domain tokens");
  merge_cmd->add_option("--base", merge_a.base, "Base tokenizer")->required();
  merge_cmd->add_option("--domain", merge_a.domain, "Domain tokenizer")->required();
  merge_cmd->add_option("--filter", merge_a.filter, "Scheme every appended token must satisfy");
  merge_cmd->add_option("--pattern", merge_a.pattern, "Regex for a custom filter");
  merge_cmd->add_option("--out", merge_a.out, "Output tokenizer file")->required();

  FvtArgs fvt_a;
  CLI::App* fvt_cmd = sub("fvt", "Initialize embeddings for a new tokenizer");
  fvt_cmd->add_option("--old-tok", fvt_a.old_tok, "Original tokenizer")->required();
  fvt_cmd->add_option("--new-tok", fvt_a.new_tok, "New tokenizer")->required();
  fvt_cmd->add_option("--old-emb", fvt_a.old_emb, "Original embedding file")->required();
  fvt_cmd->add_option("--out-emb", fvt_a.out_emb, "Output embedding file")->required();

  HealArgs heal_a;
  CLI::App* heal_cmd = sub("heal", "Token healing for a prompt");
  heal_cmd->add_option("--tok", heal_a.tok, "Tokenizer file")->required();
  heal_cmd->add_option("--prompt", heal_a.prompt, "Prompt text")->required();
  heal_cmd->add_option("--strategy", heal_a.strategy, "none, single or nstep");
  heal_cmd->add_option("--scorer", heal_a.scorer, "uniform or ngram:FILE");

  EncodeArgs enc_a;
  CLI::App* enc_cmd = sub("encode", "Print token ids for --text or stdin");
  enc_cmd->add_option("--tok", enc_a.tok, "Tokenizer file")->required();
  enc_cmd->add_option("--text", enc_a.text, "Text to encode (default: stdin)");
  enc_cmd->add_option("--dropout", enc_a.dropout, "BPE-dropout probability")
      ->check(CLI::Range(0.0, 1.0));

  DecodeArgs dec_a;
  CLI::App* dec_cmd = sub("decode", "Write the bytes for ids from --ids or stdin");
  dec_cmd->add_option("--tok", dec_a.tok, "Tokenizer file")->required();
  dec_cmd->add_option("--ids", dec_a.ids, "Whitespace-separated ids (default: stdin)");

  BenchArgs bench_a;
  CLI::App* bench_cmd = sub("bench-proxy", "Proxy step timings per vocab size");
  bench_cmd->add_option("--dim", bench_a.dim, "Hidden size");
  bench_cmd->add_option("--layers", bench_a.layers, "Layer count");
  bench_cmd->add_option("--vocabs", bench_a.vocabs, "Vocabulary sizes")->delimiter(',');
  bench_cmd->add_option("--repeats", bench_a.repeats, "Timing repeats (best is kept)");
  bench_cmd->add_option("--label", bench_a.label, "Model label in the output");
  bench_cmd->add_option("--out", bench_a.out, "Observations file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (mem_a.arch.n_kv_heads == 0) mem_a.arch.n_kv_heads = mem_a.arch.n_heads;

  if (*train_cmd) run_train(train_a, g);
  else if (*mix_cmd) run_mix_sweep(mix_a, g);
  else if (*sweep_cmd) run_vocab_sweep(sweep_a, g);
  else if (*eval_cmd) run_eval(eval_a, g);
  else if (*mem_cmd) run_optimize_memory(mem_a);
  else if (*inf_cmd) run_optimize_inference(inf_a);
  else if (*merge_cmd) run_merge(merge_a);
  else if (*fvt_cmd) run_fvt(fvt_a);
  else if (*heal_cmd) run_heal(heal_a);
  else if (*enc_cmd) run_encode(enc_a, g);
  else if (*dec_cmd) run_decode(dec_a);
  else if (*bench_cmd) run_bench(bench_a);
  return 0;
}

}  // namespace
}  // namespace toksmith

int main(int argc, char** argv) {
  try {
    return toksmith::run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
