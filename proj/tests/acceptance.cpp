// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <sys/wait.h>
#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "toksmith/adapt.hpp"
#include "toksmith/corpus.hpp"
#include "toksmith/costmodel.hpp"
#include "toksmith/error.hpp"
#include "toksmith/healing.hpp"
#include "toksmith/metrics.hpp"
#include "toksmith/persistence.hpp"
#include "toksmith/trainer.hpp"

namespace toksmith {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Thrown by check() to fail a criterion with a reason.
struct Failed {
  std::string why;
};

void check(bool ok, const std::string& why) {
  if (!ok) throw Failed{why};
}

std::string fmt(double v, int digits = 4) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << v;
  return out.str();
}

const std::string kData = TOKSMITH_DATA_DIR;
const std::string kManifestPath = kData + "/toy/manifest.json";
const std::vector<Scheme> kSchemes = {Scheme::kIdentity, Scheme::kGpt2, Scheme::kGpt4,
                                      Scheme::kPunct};

const CorpusManifest& manifest() {
  static const CorpusManifest m = CorpusManifest::load(kManifestPath);
  return m;
}

Tokenizer train_mix(std::map<std::string, double> weights, Scheme scheme, std::size_t vocab,
                    std::size_t chars = 1'000'000, std::uint64_t seed = 1) {
  MixSampler sampler(manifest(), MixSpec{std::move(weights), chars}, seed);
  return train(PretokenizerSpec(scheme), sampler.source(), {.target_vocab = vocab});
}

const std::map<std::string, double> kUniform = {
    {"code", 1.0 / 3}, {"english", 1.0 / 3}, {"multilingual", 1.0 / 3}};

// Fixed reference for every NSL comparison below.
const Tokenizer& baseline() {
  static const Tokenizer t = train_mix(kUniform, Scheme::kGpt4, 8000);
  return t;
}

double code_nsl(const Tokenizer& t) {
  const std::vector<NamedTokenizer> one = {{"t", t}};
  return evaluate(one, baseline(), manifest())[0].per_category.at("code").nsl;
}

std::vector<std::string> all_holdout() {
  std::vector<std::string> docs;
  for (const auto& c : manifest().categories()) {
    for (const auto& s : c.subsets) {
      for (auto& d : read_documents(s.holdout_files())) docs.push_back(std::move(d));
    }
  }
  return docs;
}

struct CliResult {
  int code;
  std::string out;
};

CliResult run_cli(const testing::TempDir& dir, const std::string& args) {
  const auto out = dir.path() / "cli_stdout.txt";
  const std::string cmd =
      std::string("\"") + TOKSMITH_CLI + "\" " + args + " > \"" + out.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, read_file(out)};
}

std::size_t longest_digit_run(std::string_view s) {
  std::size_t run = 0, best = 0;
  const auto len = static_cast<int32_t>(s.size());
  int32_t i = 0;
  while (i < len) {
    UChar32 c;
    U8_NEXT(s.data(), i, len, c);
    if (c >= 0 && (U_GET_GC_MASK(c) & U_GC_N_MASK)) {
      best = std::max(best, ++run);
    } else {
      run = 0;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------

std::string reversibility() {
  const auto start = Clock::now();
  std::mt19937_64 rng(2024);
  std::vector<std::string> inputs;
  for (int i = 0; i < 10'000; ++i) inputs.push_back(testing::random_utf8(rng, 60));
  std::size_t checks = 0;
  for (Scheme s : kSchemes) {
    const Tokenizer t = train_mix(kUniform, s, 2000, 300'000);
    for (double p : {0.0, 0.5, 1.0}) {
      for (std::size_t i = 0; i < inputs.size(); ++i) {
        const auto ids = p == 0.0 ? t.encode(inputs[i]) : t.encode(inputs[i], DropoutPolicy{p, i});
        check(t.decode(ids) == inputs[i], std::string(scheme_name(s)) + " p=" + fmt(p, 1) +
                                              " fails on input " + std::to_string(i));
        ++checks;
      }
    }
  }
  const double secs = seconds_since(start);
  check(secs < 60.0, "took " + fmt(secs, 1) + " s");
  return std::to_string(checks) + " round trips, " + fmt(secs, 1) + " s";
}

std::string numeric_document(std::mt19937_64& rng) {
  static const std::vector<std::string> words = {
      "total", "invoice", "account", "phone", "order", "batch", "serial", "amount",
      "balance", "ref", "id", "date", "version", "count", "rate", "price"};
  static const std::vector<std::string> exotic_digits = {
      "\xD9\xA0\xD9\xA1\xD9\xA2\xD9\xA3\xD9\xA4\xD9\xA5",                    // Arabic-Indic
      "\xEF\xBC\x91\xEF\xBC\x92\xEF\xBC\x93\xEF\xBC\x94\xEF\xBC\x95",        // fullwidth
      "\xE0\xA5\xA7\xE0\xA5\xA8\xE0\xA5\xA9\xE0\xA5\xAA",                    // Devanagari
      "\xC2\xBD\xC2\xBC\xC2\xBE\xC2\xB2\xC2\xB3"};                           // No category
  auto digits = [&](std::size_t n) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<char>('0' + rng() % 10);
    return s;
  };
  std::string doc;
  for (int line = 0; line < 40; ++line) {
    doc += words[rng() % words.size()];
    switch (rng() % 7) {
      case 0: doc += " " + digits(4 + rng() % 12); break;
      case 1: doc += ": +1 " + digits(3) + " " + digits(3) + " " + digits(4); break;
      case 2: doc += " " + digits(4) + "-" + digits(2) + "-" + digits(2); break;
      case 3: doc += " = " + digits(1 + rng() % 6) + "." + digits(2 + rng() % 8); break;
      case 4: doc += " " + exotic_digits[rng() % exotic_digits.size()] + digits(rng() % 5); break;
      case 5: doc += " #" + digits(6) + digits(6); break;
      default: doc += " x" + digits(2 + rng() % 20) + "y"; break;
    }
    doc += rng() % 3 == 0 ? "\n" : ", ";
  }
  return doc;
}

std::string digit_cap() {
  std::mt19937_64 rng(7);
  std::vector<std::string> docs;
  for (int i = 0; i < 1500; ++i) docs.push_back(numeric_document(rng));
  // Ordinary text supplies enough distinct pairs to reach the target vocab.
  for (const auto& c : manifest().categories()) {
    for (const auto& s : c.subsets) {
      for (auto& d : read_documents(s.train_files())) docs.push_back(std::move(d));
    }
  }
  std::ostringstream detail;
  for (Scheme s : {Scheme::kGpt4, Scheme::kPunct}) {
    const Tokenizer t = train(PretokenizerSpec(s), docs, {.target_vocab = 4000});
    check(t.vocab_size() == 4000, std::string(scheme_name(s)) + " reached only " +
                                      std::to_string(t.vocab_size()) + " tokens");
    std::size_t worst = 0;
    for (const auto& tok : t.vocab()) worst = std::max(worst, longest_digit_run(tok));
    check(worst <= 3, std::string(scheme_name(s)) + " has a token with " +
                          std::to_string(worst) + " digits in a row");
    detail << scheme_name(s) << " max run " << worst << "; ";
  }
  // The corpus must be able to produce long digit tokens without the cap.
  const Tokenizer free = train(PretokenizerSpec(), docs, {.target_vocab = 4000});
  std::size_t free_worst = 0;
  for (const auto& tok : free.vocab()) free_worst = std::max(free_worst, longest_digit_run(tok));
  check(free_worst > 3, "identity control never exceeded 3 digits");
  detail << "identity control max run " << free_worst;
  return detail.str();
}

std::string merge_prefix() {
  const auto start = Clock::now();
  const std::vector<std::size_t> sizes = {1000, 2000, 4000, 8000};
  std::vector<Tokenizer> family;
  for (std::size_t v : sizes) family.push_back(train_mix(kUniform, Scheme::kGpt4, v));
  for (std::size_t k = 0; k < family.size(); ++k) {
    check(family[k].vocab_size() == sizes[k], "vocab " + std::to_string(sizes[k]) + " not reached");
    if (k == 0) continue;
    const auto& small = family[k - 1].merges();
    const auto& large = family[k].merges();
    check(std::equal(small.begin(), small.end(), large.begin()),
          "merges at " + std::to_string(sizes[k - 1]) + " are not a prefix of " +
              std::to_string(sizes[k]));
  }
  const auto docs = all_holdout();
  for (const auto& d : docs) {
    for (std::size_t k = 1; k < family.size(); ++k) {
      check(family[k].count_tokens(d) <= family[k - 1].count_tokens(d),
            "token count grew from " + std::to_string(sizes[k - 1]) + " to " +
                std::to_string(sizes[k]));
    }
  }

  testing::TempDir dir;
  const auto curve_path = (dir.path() / "curve.json").string();
  const CliResult r = run_cli(dir, "--seed 1 vocab-sweep --manifest " + kManifestPath +
                                       " --scheme gpt4 --vocabs 1000,2000,4000,8000 --anchor 4000 "
                                       "--out " + curve_path);
  check(r.code == 0, "vocab-sweep failed: " + r.out);
  const NslCurve curve = NslCurve::parse(read_file(curve_path));
  check(curve.at(4000) == 1.0, "anchor value " + fmt(curve.at(4000), 17));
  for (std::size_t k = 1; k < curve.points().size(); ++k) {
    check(curve.points()[k].second <= curve.points()[k - 1].second, "curve increases");
  }
  const double secs = seconds_since(start);
  check(secs < 120.0, "took " + fmt(secs, 1) + " s");
  std::ostringstream detail;
  detail << docs.size() << " docs, curve";
  for (const auto& [v, x] : curve.points()) detail << " " << v << ":" << fmt(x, 3);
  detail << ", " << fmt(secs, 1) << " s";
  return detail.str();
}

std::string data_mix() {
  const Tokenizer code_only = train_mix({{"code", 1.0}}, Scheme::kGpt4, 4000);
  const Tokenizer no_code =
      train_mix({{"code", 0.0}, {"english", 0.5}, {"multilingual", 0.5}}, Scheme::kGpt4, 4000);
  const double a = code_nsl(code_only), b = code_nsl(no_code);
  check(a < b, "code NSL " + fmt(a) + " (100% code) vs " + fmt(b) + " (0% code)");
  return "code NSL " + fmt(a) + " (100% code) < " + fmt(b) + " (0% code)";
}

std::string pretokenization_order() {
  const std::map<std::string, double> code = {{"code", 1.0}};
  const double identity = code_nsl(train_mix(code, Scheme::kIdentity, 8000));
  const double gpt4 = code_nsl(train_mix(code, Scheme::kGpt4, 8000));
  const double punct = code_nsl(train_mix(code, Scheme::kPunct, 8000));
  const std::string detail =
      "identity " + fmt(identity) + ", gpt4 " + fmt(gpt4) + ", punct " + fmt(punct);
  check(identity < gpt4 && gpt4 <= punct, detail);
  return detail;
}

std::string nsl_oracle() {
  const std::vector<std::size_t> cand = {3, 5}, base = {4, 6};
  const double v = nsl_from_lengths(cand, base);
  check(std::abs(v - 0.8) <= 1e-12, "(3,5)/(4,6) = " + fmt(v, 17));
  const auto docs = all_holdout();
  const Tokenizer other = train_mix(kUniform, Scheme::kPunct, 3000, 300'000);
  check(nsl(baseline(), baseline(), docs) == 1.0, "self NSL is not exactly 1");
  const double product = nsl(other, baseline(), docs) * nsl(baseline(), other, docs);
  check(std::abs(product - 1.0) <= 1e-12, "reciprocal product " + fmt(product, 17));
  return "0.8, self 1.0, reciprocal product - 1 = " + fmt(product - 1.0, 17);
}

std::string renyi() {
  const std::vector<std::uint64_t> uniform(1000, 7);
  const double u = renyi_efficiency(uniform, 1000);
  check(std::abs(u - 1.0) <= 1e-9, "uniform gives " + fmt(u, 12));
  std::vector<std::uint64_t> single(1000, 0);
  single[17] = 50;
  const double z = renyi_efficiency(single, 1000);
  check(z == 0.0, "single token gives " + fmt(z, 12));
  const auto docs = all_holdout();
  const double identity = renyi_efficiency(train_mix(kUniform, Scheme::kIdentity, 8000), docs);
  const double gpt4 = renyi_efficiency(baseline(), docs);
  check(identity >= gpt4, "identity " + fmt(identity) + " < gpt4 " + fmt(gpt4));
  return "uniform 1, single 0, identity " + fmt(identity) + " >= gpt4 " + fmt(gpt4);
}

std::string cost_model() {
  check(embed_params(ModelArch{1600, 48, 25, 25, false}, 32000) == 102'400'000, "embed_params");
  const NslCurve curve({{10000, 1.13}, {16000, 1.07}, {32000, 1.0}, {64000, 0.94},
                        {100000, 0.915}, {128000, 0.90}, {256000, 0.87}});
  const ModelArch mha{8192, 80, 64, 64, false};
  const ModelArch gqa{8192, 80, 64, 8, false};
  for (const auto& [v, x] : curve.points()) {
    (void)x;
    check(cache_params(gqa, 4, 2048, curve, v) * 8.0 == cache_params(mha, 4, 2048, curve, v),
          "GQA cache is not exactly 1/8 at " + std::to_string(v));
  }
  std::vector<std::size_t> grid;
  for (const auto& p : curve.points()) grid.push_back(p.first);
  const ModelArch seven_b{4096, 32, 32, 32, false};
  const auto small = memory_optimal(seven_b, 1, 1000, curve, grid);
  const auto large = memory_optimal(seven_b, 64, 16000, curve, grid);
  check(small.best_vocab == grid.front(), "b=1 optimum " + std::to_string(small.best_vocab));
  check(large.best_vocab > small.best_vocab, "b=64 optimum " + std::to_string(large.best_vocab));

  InferenceObservations obs;
  for (std::size_t v : grid) obs["m"].push_back({v, 0.37 + 2.5e-6 * static_cast<double>(v)});
  const auto inf = inference_optimal(obs, curve, grid);
  check(std::abs(inf[0].fit.slope - 2.5e-6) <= 1e-9, "slope " + fmt(inf[0].fit.slope, 12));
  bool anchored = false;
  for (const auto& row : inf[0].table) {
    if (row.vocab == 32000) anchored = row.cost == 1.0;
  }
  check(anchored, "cost(32000) != 1");
  return "memory optima " + std::to_string(small.best_vocab) + " (b=1, l=1000) < " +
         std::to_string(large.best_vocab) + " (b=64, l=16000); fitted slope error " +
         fmt(std::abs(inf[0].fit.slope - 2.5e-6), 15);
}

Tokenizer with_merges(const std::vector<std::array<std::string, 3>>& merges) {
  std::vector<std::string> vocab;
  for (int b = 0; b < 256; ++b) vocab.emplace_back(1, static_cast<char>(b));
  std::vector<Merge> out;
  for (const auto& [l, r, res] : merges) {
    auto id = [&](const std::string& s) {
      return static_cast<TokenId>(std::find(vocab.begin(), vocab.end(), s) - vocab.begin());
    };
    const TokenId li = id(l), ri = id(r);
    vocab.push_back(res);
    out.push_back({li, ri, static_cast<TokenId>(vocab.size() - 1)});
  }
  return Tokenizer(PretokenizerSpec(), vocab, out);
}

std::string fvt() {
  const Tokenizer old_tok = with_merges(
      {{"t", "h", "th"}, {"th", "e", "the"}, {"r", "e", "re"}, {"i", "n", "in"}, {"in", "g", "ing"}});
  const Tokenizer new_tok = with_merges(
      {{"t", "h", "th"}, {"th", "e", "the"}, {"r", "e", "re"}, {"the", "re", "there"},
       {"there", "s", "theres"}});
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<float> dist(-2.0f, 2.0f);
  std::vector<float> values(old_tok.vocab_size() * 4);
  for (auto& v : values) v = dist(rng);
  // The five learned tokens get a hand-written block.
  const float known[5][4] = {{1, 0, 0, 0}, {0.5f, 2, -1, 3}, {0, 1, 0, -2}, {4, 4, 4, 4}, {-1, 0.25f, 8, 0}};
  for (int r = 0; r < 5; ++r) {
    for (int c = 0; c < 4; ++c) values[(256 + r) * 4 + c] = known[r][c];
  }
  const EmbeddingMatrix old_m(old_tok.vocab_size(), 4, values);
  const EmbeddingMatrix out = fvt_transfer(old_tok, new_tok, old_m);

  const std::map<std::string, std::size_t> expected_parts = {{"the", 1}, {"there", 2}, {"theres", 3}};
  for (const auto& [tok, n_parts] : expected_parts) {
    const TokenId nid = *new_tok.find(tok);
    std::vector<TokenId> parts;
    if (auto hit = old_tok.find(tok)) {
      parts = {*hit};
    } else {
      parts = testing::naive_encode(old_tok, tok);
    }
    check(parts.size() == n_parts, tok + " decomposes into " + std::to_string(parts.size()));
    for (std::size_t c = 0; c < 4; ++c) {
      double mean = 0.0;
      for (TokenId p : parts) mean += old_m.row(p)[c];
      mean /= static_cast<double>(parts.size());
      const double got = out.row(nid)[c];
      check(std::abs(got - mean) <= 1e-6 * std::max(1.0, std::abs(mean)),
            tok + " column " + std::to_string(c) + ": " + fmt(got, 8) + " vs " + fmt(mean, 8));
    }
  }
  return "copied 'the', mean-of-2 'there', mean-of-3 'theres' match brute force";
}

std::string merge_construction() {
  const Tokenizer base = train_mix({{"english", 1.0}}, Scheme::kGpt4, 3000, 400'000);
  const Tokenizer self = merge_tokenizers(base, base, PretokenizerSpec(Scheme::kGpt4));
  check(serialize_tokenizer(self) == serialize_tokenizer(base), "self-merge changed the tokenizer");

  const Tokenizer digits = with_merges({{"1", "2", "12"}, {"12", "3", "123"}, {"4", "5", "45"},
                                        {"123", "45", "12345"}, {"a", "b", "ab"}});
  const Tokenizer filtered = merge_tokenizers(base, digits, PretokenizerSpec(Scheme::kGpt4));
  check(!filtered.find("12345"), "5-digit token survived the gpt4 filter");

  const Tokenizer domain = train_mix({{"code", 1.0}}, Scheme::kIdentity, 3000, 400'000);
  const Tokenizer merged = merge_tokenizers(base, domain, PretokenizerSpec(Scheme::kGpt4));
  std::vector<std::string> appended;
  for (std::size_t id = base.vocab_size(); id < merged.vocab_size(); ++id) {
    appended.push_back(merged.token_bytes(static_cast<TokenId>(id)));
  }
  check(!appended.empty(), "nothing appended");
  std::size_t compared = 0;
  for (const auto& c : manifest().categories()) {
    for (const auto& s : c.subsets) {
      for (const auto& doc : read_documents(s.holdout_files())) {
        // Lines that contain no appended token's bytes.
        std::istringstream lines(doc);
        for (std::string line; std::getline(lines, line);) {
          const bool clean = std::none_of(appended.begin(), appended.end(), [&](const std::string& t) {
            return line.find(t) != std::string::npos;
          });
          if (!clean) continue;
          check(merged.encode(line) == base.encode(line), "encodings differ on: " + line);
          ++compared;
        }
      }
    }
  }
  check(compared >= 50, "only " + std::to_string(compared) + " clean lines");
  return "merged vocab " + std::to_string(merged.vocab_size()) + " (+" +
         std::to_string(appended.size()) + "), " + std::to_string(compared) +
         " clean lines encode identically";
}

std::string healing() {
  const Tokenizer toy = with_merges({{"a", "b", "ab"}, {"ab", "c", "abc"}});
  const HealingResult r = heal(toy, "ab", UniformScorer(toy.vocab_size()), HealStrategy::kNStep);
  std::vector<TokenId> brute;
  for (std::size_t id = 0; id < toy.vocab_size(); ++id) {
    if (toy.vocab()[id].starts_with("ab")) brute.push_back(static_cast<TokenId>(id));
  }
  check(r.candidates == brute && brute.size() == 2, "toy candidates differ from brute force");

  std::mt19937_64 rng(31);
  const std::string alphabet = "ab:/. ";
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::string> docs(4);
    for (auto& d : docs) {
      for (std::size_t i = 0, n = 5 + rng() % 40; i < n; ++i) d += alphabet[rng() % alphabet.size()];
    }
    const auto t = train(PretokenizerSpec(), docs, {.target_vocab = 256 + rng() % 40});
    std::string prompt;
    for (std::size_t i = 0, n = 1 + rng() % 12; i < n; ++i) prompt += alphabet[rng() % alphabet.size()];
    const Healer healer(t);
    for (auto s : {HealStrategy::kSingleStep, HealStrategy::kNStep}) {
      const auto h = healer.heal(prompt, UniformScorer(t.vocab_size()), s);
      const std::string chosen = t.token_bytes(h.chosen);
      check(!h.candidates.empty(), "empty candidates");
      check(chosen.starts_with(h.removed_suffix) &&
                t.decode(h.kept_ids) + chosen.substr(0, h.removed_suffix.size()) == prompt,
            "prefix safety broken for prompt '" + prompt + "'");
    }
  }

  const Tokenizer web = with_merges({{"h", "t", "ht"}, {"ht", "t", "htt"}, {"htt", "p", "http"},
                                     {"http", "s", "https"}, {":", "/", ":/"}, {":/", "/", "://"}});
  const auto single = heal(web, "https:/", UniformScorer(web.vocab_size()), HealStrategy::kSingleStep);
  check(single.removed_suffix == ":/", "backtracked '" + single.removed_suffix + "'");
  check(single.candidates == std::vector<TokenId>{*web.find(":/"), *web.find("://")},
        "https:/ candidates");
  return "toy NStep {ab, abc}, 1000 fuzzed prompts prefix-safe, 'https:/' backtracks ':/' -> {':/', '://'}";
}

std::string end_to_end() {
  const auto start = Clock::now();
  std::vector<std::string> runs;
  for (int attempt = 0; attempt < 2; ++attempt) {
    testing::TempDir dir;
    const std::string d = dir.path().string();
    auto step = [&](const std::string& args) {
      const CliResult r = run_cli(dir, "--seed 42 " + args);
      check(r.code == 0, "'" + args + "' failed: " + r.out);
      return r.out;
    };
    std::string outputs;
    step("train --manifest " + kManifestPath + " --scheme gpt4 --vocab 8000 --out " + d + "/gpt4.json");
    step("train --manifest " + kManifestPath + " --scheme identity --vocab 8000 --out " + d + "/identity.json");
    outputs += step("eval --manifest " + kManifestPath + " --baseline " + d + "/gpt4.json --tok " + d +
                    "/gpt4.json --tok " + d + "/identity.json --json " + d + "/eval.json");
    step("vocab-sweep --manifest " + kManifestPath +
         " --scheme gpt4 --vocabs 1000,2000,4000,8000 --anchor 4000 --out " + d + "/curve.json");
    outputs += step("optimize-memory --dim 1024 --layers 24 --heads 16 --batch 32 --seqlen-32k 4096 --curve " +
                    d + "/curve.json");
    for (const char* f : {"gpt4.json", "identity.json", "eval.json", "curve.json"}) {
      outputs += read_file(dir.path() / f);
    }
    runs.push_back(outputs);
  }
  check(runs[0] == runs[1], "outputs differ between two runs with the same seed");
  const double secs = seconds_since(start);
  check(secs < 300.0, "took " + fmt(secs, 1) + " s");
  return "two full runs identical, " + fmt(secs, 1) + " s total";
}

}  // namespace
}  // namespace toksmith

int main() {
  using namespace toksmith;
  const std::vector<std::pair<const char*, std::function<std::string()>>> criteria = {
      {"reversibility-fuzz", reversibility},
      {"digit-cap", digit_cap},
      {"merge-prefix-monotonicity", merge_prefix},
      {"data-mix-direction", data_mix},
      {"pretokenization-ordering", pretokenization_order},
      {"nsl-oracle", nsl_oracle},
      {"renyi", renyi},
      {"cost-model", cost_model},
      {"fvt-oracle", fvt},
      {"merge-construction", merge_construction},
      {"token-healing", healing},
      {"end-to-end", end_to_end},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = Clock::now();
    std::string line;
    try {
      line = std::string("PASS ") + name + ": " + fn();
    } catch (const Failed& f) {
      line = std::string("FAIL ") + name + ": " + f.why;
      ++failures;
    } catch (const std::exception& e) {
      line = std::string("FAIL ") + name + ": exception: " + e.what();
      ++failures;
    }
    std::cout << line << " [" << fmt(seconds_since(start), 1) << " s]" << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
