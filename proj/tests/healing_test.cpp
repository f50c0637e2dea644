#include "toksmith/healing.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <nlohmann/json.hpp>
#include <random>

#include "toksmith/error.hpp"
#include "toksmith/trainer.hpp"

namespace toksmith {
namespace {

Tokenizer build(const std::vector<std::pair<std::string, std::pair<std::string, std::string>>>& extra) {
  std::vector<std::string> vocab;
  for (int b = 0; b < 256; ++b) vocab.emplace_back(1, static_cast<char>(b));
  std::vector<Merge> merges;
  auto id_of = [&](const std::string& s) {
    return static_cast<TokenId>(std::find(vocab.begin(), vocab.end(), s) - vocab.begin());
  };
  for (const auto& [tok, parts] : extra) {
    const TokenId l = id_of(parts.first), r = id_of(parts.second);
    vocab.push_back(tok);
    merges.push_back({l, r, static_cast<TokenId>(vocab.size() - 1)});
  }
  return Tokenizer(PretokenizerSpec(), vocab, merges);
}

std::vector<TokenId> brute_force_candidates(const Tokenizer& t, const std::string& suffix) {
  std::vector<TokenId> out;
  for (std::size_t id = 0; id < t.vocab_size(); ++id) {
    if (t.vocab()[id].starts_with(suffix)) out.push_back(static_cast<TokenId>(id));
  }
  return out;
}

// Scores token ids from a fixed table; everything else gets -1.
class TableScorer final : public Scorer {
 public:
  TableScorer(std::size_t vocab, std::map<TokenId, double> table) : vocab_(vocab), table_(table) {}
  std::vector<double> score(std::span<const TokenId>) const override {
    std::vector<double> s(vocab_, -1.0);
    for (const auto& [id, v] : table_) s[id] = v;
    return s;
  }

 private:
  std::size_t vocab_;
  std::map<TokenId, double> table_;
};

class ShortScorer final : public Scorer {
 public:
  std::vector<double> score(std::span<const TokenId>) const override { return {1.0}; }
};

TEST(HealTest, ToyVocabNStep) {
  // Alphabet tokens plus "ab" and "abc".
  const Tokenizer t = build({{"ab", {"a", "b"}}, {"abc", {"ab", "c"}}});
  const UniformScorer uniform(t.vocab_size());
  const HealingResult r = heal(t, "ab", uniform, HealStrategy::kNStep);
  EXPECT_TRUE(r.kept_ids.empty());
  EXPECT_EQ(r.removed_suffix, "ab");
  EXPECT_EQ(r.candidates, (std::vector<TokenId>{256, 257}));
  EXPECT_EQ(r.candidates, brute_force_candidates(t, "ab"));
  EXPECT_EQ(r.chosen, 256u);
  EXPECT_FALSE(r.fell_back);
}

TEST(HealTest, HttpsPrompt) {
  const Tokenizer t = build({{"ht", {"h", "t"}}, {"htt", {"ht", "t"}},
                             {"http", {"htt", "p"}}, {"https", {"http", "s"}}, {":/", {":", "/"}}, {"://", {":/", "/"}},
                             {"https://", {"https", "://"}}});
  const TokenId https = *t.find("https"), colon_slash = *t.find(":/"), scheme = *t.find("://");
  ASSERT_EQ(t.encode("https:/"), (std::vector<TokenId>{https, colon_slash}));

  // Without healing a uniform model is free to pick any token; a model
  // that likes "//" after ":/" produces the mangled "https:///".
  const TableScorer likes_slashes(t.vocab_size(), {{'/', 2.0}, {scheme, 1.0}});
  const auto none = heal(t, "https:/", likes_slashes, HealStrategy::kNone);
  EXPECT_EQ(none.chosen, static_cast<TokenId>('/'));

  const auto single = heal(t, "https:/", likes_slashes, HealStrategy::kSingleStep);
  EXPECT_EQ(single.kept_ids, (std::vector<TokenId>{https}));
  EXPECT_EQ(single.removed_suffix, ":/");
  EXPECT_EQ(single.candidates, (std::vector<TokenId>{colon_slash, scheme}));
  EXPECT_EQ(single.chosen, scheme);
  EXPECT_EQ(t.decode(single.kept_ids) + t.token_bytes(single.chosen), "https://");

  const auto nstep = heal(t, "https:/", likes_slashes, HealStrategy::kNStep);
  EXPECT_TRUE(nstep.kept_ids.empty());
  EXPECT_EQ(nstep.removed_suffix, "https:/");
  EXPECT_EQ(nstep.candidates, (std::vector<TokenId>{*t.find("https://")}));
}

TEST(HealTest, BoundaryTokenWithoutExtensions) {
  const Tokenizer t = build({{"ab", {"a", "b"}}, {"abc", {"ab", "c"}}});
  const auto r = heal(t, "xc", UniformScorer(t.vocab_size()), HealStrategy::kNStep);
  EXPECT_EQ(r.removed_suffix, "c");
  EXPECT_EQ(r.candidates, (std::vector<TokenId>{'c'}));
  EXPECT_EQ(r.chosen, static_cast<TokenId>('c'));
  EXPECT_EQ(r.kept_ids, (std::vector<TokenId>{'x'}));
}

TEST(HealTest, UniformScorerPicksSmallestId) {
  const Tokenizer t = build({{"ab", {"a", "b"}}, {"abc", {"ab", "c"}}});
  const auto r = heal(t, "zz", UniformScorer(t.vocab_size()), HealStrategy::kNone);
  EXPECT_EQ(r.candidates.size(), t.vocab_size());
  EXPECT_EQ(r.chosen, 0u);
  EXPECT_EQ(r.kept_ids, t.encode("zz"));
}

TEST(HealTest, Errors) {
  const Tokenizer t;
  EXPECT_THROW(heal(t, "", UniformScorer(256), HealStrategy::kNStep), ConfigError);
  EXPECT_THROW(heal(t, "a", UniformScorer(10), HealStrategy::kNStep), InterfaceError);
  EXPECT_THROW(heal(t, "a", ShortScorer(), HealStrategy::kNone), InterfaceError);
  EXPECT_THROW(parse_strategy("double"), ConfigError);
  for (auto s : {HealStrategy::kNone, HealStrategy::kSingleStep, HealStrategy::kNStep}) {
    EXPECT_EQ(parse_strategy(strategy_name(s)), s);
  }
}

TEST(HealTest, PrefixSafetyFuzz) {
  std::mt19937_64 rng(77);
  const std::string alphabet = "ab:/ ";
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::string> docs(3);
    for (auto& d : docs) {
      for (std::size_t i = 0, n = 5 + rng() % 40; i < n; ++i) d += alphabet[rng() % alphabet.size()];
    }
    const auto t = train(PretokenizerSpec(), docs, {.target_vocab = 256 + rng() % 30});
    std::string prompt;
    for (std::size_t i = 0, n = 1 + rng() % 12; i < n; ++i) prompt += alphabet[rng() % alphabet.size()];
    const Healer healer(t);
    for (auto s : {HealStrategy::kSingleStep, HealStrategy::kNStep}) {
      const auto r = healer.heal(prompt, UniformScorer(t.vocab_size()), s);
      ASSERT_FALSE(r.candidates.empty());
      ASSERT_EQ(r.candidates, brute_force_candidates(t, r.removed_suffix));
      const std::string chosen = t.token_bytes(r.chosen);
      ASSERT_TRUE(chosen.starts_with(r.removed_suffix));
      ASSERT_EQ(t.decode(r.kept_ids) + chosen.substr(0, r.removed_suffix.size()), prompt);
      ASSERT_EQ(r.chosen, r.candidates.front());
      if (s == HealStrategy::kNStep && !r.kept_ids.empty()) {
        // Maximal: one more token would leave nothing covering the suffix.
        const std::string enlarged = t.token_bytes(r.kept_ids.back()) + r.removed_suffix;
        ASSERT_TRUE(brute_force_candidates(t, enlarged).empty());
      }
    }
  }
}

TEST(NgramScorerTest, PrefersSeenContinuations) {
  const Tokenizer t = build({{"ab", {"a", "b"}}, {"abc", {"ab", "c"}}, {"xy", {"x", "y"}}});
  const NgramScorer scorer(t, std::string(200, ' ') + "ab abc abc abc ab abc", 3);
  const std::vector<TokenId> ctx = t.encode("abc ");
  const auto s = scorer.score(ctx);
  ASSERT_EQ(s.size(), t.vocab_size());
  EXPECT_GT(s[*t.find("abc")], s[*t.find("xy")]);
  EXPECT_TRUE(std::all_of(s.begin(), s.end(), [](double v) { return std::isfinite(v); }));
  const auto r = heal(t, "abc a", scorer, HealStrategy::kNStep);
  EXPECT_EQ(r.removed_suffix, "a");
  EXPECT_EQ(t.token_bytes(r.chosen), "abc");
}

TEST(HealTest, JsonOutput) {
  const Tokenizer t = build({{"ab", {"a", "b"}}, {"abc", {"ab", "c"}}});
  const auto r = heal(t, "ab", UniformScorer(t.vocab_size()), HealStrategy::kNStep);
  const auto j = nlohmann::json::parse(healing_result_json(t, r));
  EXPECT_TRUE(j.is_object());
}

}  // namespace
}  // namespace toksmith
