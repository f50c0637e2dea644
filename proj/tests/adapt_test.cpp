#include "toksmith/adapt.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "test_util.hpp"
#include "toksmith/error.hpp"
#include "toksmith/trainer.hpp"

namespace toksmith {
namespace {

// Byte vocab plus `extra` tokens, each produced by the merge listed with it.
Tokenizer build(const std::vector<std::pair<std::string, std::pair<std::string, std::string>>>& extra,
                PretokenizerSpec spec = {}) {
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
  return Tokenizer(std::move(spec), vocab, merges);
}

TEST(FvtTest, MeanOfTwoRows) {
  const Tokenizer old_tok;
  EmbeddingMatrix old_m(256, 2);
  old_m.row('a')[0] = 1.0f;
  old_m.row('b')[1] = 1.0f;
  const Tokenizer new_tok = build({{"ab", {"a", "b"}}});
  const EmbeddingMatrix out = fvt_transfer(old_tok, new_tok, old_m);
  ASSERT_EQ(out.rows(), 257u);
  ASSERT_EQ(out.cols(), 2u);
  EXPECT_EQ(out.row(256)[0], 0.5f);
  EXPECT_EQ(out.row(256)[1], 0.5f);
  EXPECT_EQ(out.row('a')[0], 1.0f);
}

TEST(FvtTest, SubsetVocabIsRowSelection) {
  const Tokenizer old_tok = build({{"he", {"h", "e"}}, {"ll", {"l", "l"}}, {"hell", {"he", "ll"}}});
  const Tokenizer new_tok = build({{"ll", {"l", "l"}}});
  std::vector<float> values(old_tok.vocab_size() * 3);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = 0.1f * static_cast<float>(i) - 7.0f;
  const EmbeddingMatrix old_m(old_tok.vocab_size(), 3, values);
  const EmbeddingMatrix out = fvt_transfer(old_tok, new_tok, old_m);
  for (std::size_t id = 0; id < new_tok.vocab_size(); ++id) {
    const TokenId old_id = *old_tok.find(new_tok.token_bytes(static_cast<TokenId>(id)));
    for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(out.row(id)[c], old_m.row(old_id)[c]);
  }
}

TEST(FvtTest, BypassesOldPreTokenizer) {
  // Under gpt4, "\t\tif" splits into two chunks; FVT still decomposes it
  // with raw merges.
  const Tokenizer old_tok = build({{"\t\t", {"\t", "\t"}}, {"if", {"i", "f"}}, {"\t\tif", {"\t\t", "if"}}},
                                  PretokenizerSpec(Scheme::kGpt4));
  const Tokenizer new_tok = build({{"if", {"i", "f"}}, {"\tif", {"\t", "if"}}});
  EmbeddingMatrix old_m(old_tok.vocab_size(), 1);
  old_m.row('\t')[0] = 2.0f;
  old_m.row(*old_tok.find("if"))[0] = 5.0f;
  const EmbeddingMatrix out = fvt_transfer(old_tok, new_tok, old_m);
  EXPECT_FLOAT_EQ(out.row(*new_tok.find("\tif"))[0], 3.5f);
}

TEST(FvtTest, MatchesBruteForceOnTrainedTokenizers) {
  std::mt19937_64 rng(12);
  std::vector<std::string> a, b;
  for (int i = 0; i < 30; ++i) {
    a.push_back("def f(x):\n    return x + " + std::to_string(rng() % 1000) + testing::random_utf8(rng, 10));
    b.push_back("The quick brown fox " + std::to_string(rng() % 1000) + testing::random_utf8(rng, 10));
  }
  const auto old_tok = train(PretokenizerSpec(Scheme::kGpt4), a, {.target_vocab = 400});
  const auto new_tok = train(PretokenizerSpec(), b, {.target_vocab = 450});
  std::normal_distribution<float> dist(0.0f, 1.0f);
  std::vector<float> values(old_tok.vocab_size() * 4);
  for (auto& v : values) v = dist(rng);
  const EmbeddingMatrix old_m(old_tok.vocab_size(), 4, values);
  const EmbeddingMatrix out = fvt_transfer(old_tok, new_tok, old_m);
  ASSERT_EQ(out.rows(), new_tok.vocab_size());
  std::size_t composed = 0;
  for (std::size_t id = 0; id < new_tok.vocab_size(); ++id) {
    const std::string& bytes = new_tok.token_bytes(static_cast<TokenId>(id));
    std::vector<TokenId> parts;
    if (auto hit = old_tok.find(bytes)) {
      parts = {*hit};
    } else {
      parts = testing::naive_encode(old_tok, bytes);
      ++composed;
    }
    for (std::size_t c = 0; c < 4; ++c) {
      double mean = 0.0;
      for (TokenId p : parts) mean += old_m.row(p)[c];
      mean /= static_cast<double>(parts.size());
      EXPECT_NEAR(out.row(id)[c], mean, 1e-6 * std::max(1.0, std::abs(mean)));
    }
  }
  EXPECT_GT(composed, 50u);
}

TEST(FvtTest, RowMismatch) {
  EXPECT_THROW(fvt_transfer(Tokenizer(), Tokenizer(), EmbeddingMatrix(255, 2)), ValidationError);
}

TEST(MergeTest, SelfMergeIsIdentity) {
  const std::vector<std::string> docs = {"hello hello world 123 456\n\tint x = 5;"};
  const auto t = train(PretokenizerSpec(Scheme::kGpt4), docs, {.target_vocab = 300});
  const Tokenizer m = merge_tokenizers(t, t, PretokenizerSpec(Scheme::kGpt4));
  ASSERT_EQ(m.vocab_size(), t.vocab_size());
  for (std::size_t i = 0; i < t.vocab_size(); ++i) EXPECT_EQ(m.vocab()[i], t.vocab()[i]);
  ASSERT_EQ(m.merges().size(), t.merges().size());
  for (std::size_t i = 0; i < t.merges().size(); ++i) EXPECT_EQ(m.merges()[i], t.merges()[i]);
}

TEST(MergeTest, FilterDropsLongDigitRuns) {
  const Tokenizer base;
  const Tokenizer domain = build({{"12", {"1", "2"}}, {"123", {"12", "3"}}, {"45", {"4", "5"}},
                                  {"12345", {"123", "45"}}});
  const Tokenizer m = merge_tokenizers(base, domain, PretokenizerSpec(Scheme::kGpt4));
  EXPECT_TRUE(m.find("123").has_value());
  EXPECT_TRUE(m.find("45").has_value());
  EXPECT_FALSE(m.find("12345").has_value());
  EXPECT_EQ(m.vocab_size(), 259u);
  EXPECT_EQ(m.merges().size(), 3u);
  // The identity filter keeps it.
  EXPECT_TRUE(merge_tokenizers(base, domain, PretokenizerSpec()).find("12345").has_value());
}

TEST(MergeTest, AppendedMergeNeedsBothOperands) {
  const Tokenizer base;
  // " x" is rejected by the punct-free custom filter below, so " xy" loses
  // its left operand and its merge is dropped while the token stays.
  const Tokenizer domain = build({{" x", {" ", "x"}}, {" xy", {" x", "y"}}, {"xy", {"x", "y"}}});
  const PretokenizerSpec filter(Scheme::kCustom, R"( ?xy|\S+|\s)");
  const Tokenizer m = merge_tokenizers(base, domain, filter);
  EXPECT_FALSE(m.find(" x").has_value());
  ASSERT_TRUE(m.find(" xy").has_value());
  ASSERT_TRUE(m.find("xy").has_value());
  EXPECT_EQ(m.merges().size(), 1u);
  EXPECT_EQ(m.token_bytes(m.merges()[0].result), "xy");
  EXPECT_EQ(m.decode(m.encode(" xy xy")), " xy xy");
}

TEST(MergeTest, BasePreservedWhereDomainAddsNothing) {
  std::vector<std::string> code, prose;
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    code.push_back("for (int i = 0; i < n; ++i) { total += v[i] * " + std::to_string(rng() % 97) + "; }\n");
    prose.push_back("the river ran past the old mill and the miller sang " + std::to_string(rng() % 97) + "\n");
  }
  const auto base = train(PretokenizerSpec(Scheme::kGpt4), prose, {.target_vocab = 320});
  const auto domain = train(PretokenizerSpec(Scheme::kIdentity), code, {.target_vocab = 420});
  const PretokenizerSpec filter(Scheme::kGpt4);
  const Tokenizer m = merge_tokenizers(base, domain, filter);
  EXPECT_EQ(m.spec(), base.spec());
  EXPECT_LE(m.vocab_size(), base.vocab_size() + domain.vocab_size() - 256);
  std::vector<std::string> appended;
  for (std::size_t id = base.vocab_size(); id < m.vocab_size(); ++id) {
    const std::string& tok = m.token_bytes(static_cast<TokenId>(id));
    EXPECT_TRUE(filter.validate_token(tok)) << tok;
    EXPECT_FALSE(base.find(tok).has_value());
    appended.push_back(tok);
  }
  ASSERT_FALSE(appended.empty());
  for (std::size_t i = 0; i < base.merges().size(); ++i) EXPECT_EQ(m.merges()[i], base.merges()[i]);

  std::size_t checked = 0;
  for (int i = 0; i < 500; ++i) {
    static const std::vector<std::string> words = {"river", "ran", "past", "old", "mill", "miller",
                                                   "sang", "and", "the", "\n", "42", "rain"};
    std::string text = testing::random_utf8(rng, 4);
    for (int w = 0; w < 12; ++w) text += words[rng() % words.size()] + (rng() % 2 ? " " : "");
    const bool clean = std::none_of(appended.begin(), appended.end(), [&](const std::string& t) {
      return text.find(t) != std::string::npos;
    });
    if (!clean) continue;
    ++checked;
    EXPECT_EQ(m.encode(text), base.encode(text));
  }
  EXPECT_GT(checked, 0u);
  for (const auto& c : code) EXPECT_LE(m.encode(c).size(), base.encode(c).size());
}

}  // namespace
}  // namespace toksmith
