#include "toksmith/tokenizer.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <random>

#include "test_util.hpp"
#include "toksmith/error.hpp"
#include "toksmith/trainer.hpp"

namespace toksmith {
namespace {

using Bytes = std::string;

// Reference trainer: recounts every adjacent pair over the chunk list on
// each iteration and rewrites chunks left to right. Slow but obviously
// correct.
std::vector<std::pair<Bytes, Bytes>> naive_train(const PretokenizerSpec& spec,
                                                 const std::vector<std::string>& docs,
                                                 std::size_t target) {
  std::map<std::string, std::uint64_t> chunk_counts;
  for (const auto& d : docs) {
    for (auto c : spec.split(d)) ++chunk_counts[std::string(c)];
  }
  std::vector<std::pair<std::vector<Bytes>, std::uint64_t>> words;
  for (const auto& [c, n] : chunk_counts) {
    std::vector<Bytes> syms;
    for (char ch : c) syms.emplace_back(1, ch);
    words.emplace_back(std::move(syms), n);
  }
  std::set<Bytes> vocab;
  for (int b = 0; b < 256; ++b) vocab.insert(Bytes(1, static_cast<char>(b)));
  std::vector<std::pair<Bytes, Bytes>> merges;
  while (vocab.size() < target) {
    std::map<std::pair<Bytes, Bytes>, std::uint64_t> pairs;
    for (const auto& [syms, n] : words) {
      for (std::size_t i = 0; i + 1 < syms.size(); ++i) pairs[{syms[i], syms[i + 1]}] += n;
    }
    // std::map iterates pairs in ascending (left, right) order, so the
    // first maximum found is the tie-break winner.
    const std::pair<Bytes, Bytes>* best = nullptr;
    std::uint64_t best_count = 0;
    for (const auto& [p, n] : pairs) {
      if (vocab.contains(p.first + p.second)) continue;
      if (n > best_count) best = &p, best_count = n;
    }
    if (!best) break;
    const auto pick = *best;
    merges.push_back(pick);
    vocab.insert(pick.first + pick.second);
    for (auto& [syms, n] : words) {
      std::vector<Bytes> out;
      for (std::size_t i = 0; i < syms.size(); ++i) {
        if (i + 1 < syms.size() && syms[i] == pick.first && syms[i + 1] == pick.second) {
          out.push_back(pick.first + pick.second);
          ++i;
        } else {
          out.push_back(syms[i]);
        }
      }
      syms = std::move(out);
    }
  }
  return merges;
}

std::vector<std::pair<Bytes, Bytes>> merge_bytes(const Tokenizer& t) {
  std::vector<std::pair<Bytes, Bytes>> out;
  for (const auto& m : t.merges()) out.emplace_back(t.token_bytes(m.left), t.token_bytes(m.right));
  return out;
}

std::vector<std::string> small_corpus(std::uint64_t seed, std::size_t docs) {
  std::mt19937_64 rng(seed);
  static const std::vector<std::string> words = {"the", "then", "there", "cat", "cats",
                                                 "ab", "abab", "x1", "100", "2024",
                                                 "\t", "\n", ".", "foo.bar", "  "};
  std::vector<std::string> out;
  for (std::size_t d = 0; d < docs; ++d) {
    std::string s;
    const std::size_t n = 5 + rng() % 30;
    for (std::size_t i = 0; i < n; ++i) {
      s += words[rng() % words.size()];
      if (rng() % 3 == 0) s += ' ';
    }
    if (rng() % 4 == 0) s += testing::random_utf8(rng, 8);
    out.push_back(s);
  }
  return out;
}

TEST(TrainTest, FirstMergeByHandCount) {
  const std::vector<std::string> docs = {"abab abab"};
  const Tokenizer t = train(PretokenizerSpec(), docs, {.target_vocab = 258});
  ASSERT_EQ(t.vocab_size(), 258u);
  // Pairs of "abab abab": (a,b) x4, (b,a) x2, (b,' ') x1, (' ',a) x1.
  EXPECT_EQ(t.merges()[0], (Merge{'a', 'b', 256}));
  // After merging: ab ab ' ' ab ab -> (ab,ab) x2 is the unique maximum.
  EXPECT_EQ(t.merges()[1], (Merge{256, 256, 257}));
  EXPECT_EQ(t.token_bytes(257), "abab");
}

TEST(TrainTest, MergesStayInsideChunks) {
  const std::vector<std::string> docs = {"aa aa aa"};
  const Tokenizer t = train(PretokenizerSpec(Scheme::kGpt4), docs, {.target_vocab = 257});
  // Chunks "aa", " aa", " aa": (a,a) x3 beats (' ',a) x2.
  ASSERT_EQ(t.merges().size(), 1u);
  EXPECT_EQ(t.merges()[0], (Merge{'a', 'a', 256}));
}

TEST(TrainTest, ByteVocabHasNoMerges) {
  const std::vector<std::string> docs = {"hello world"};
  const Tokenizer t = train(PretokenizerSpec(Scheme::kGpt2), docs, {.target_vocab = 256});
  EXPECT_EQ(t.vocab_size(), 256u);
  EXPECT_TRUE(t.merges().empty());
}

TEST(TrainTest, StopsWhenPairsRunOut) {
  const std::vector<std::string> docs = {"abc"};
  const Tokenizer t = train(PretokenizerSpec(), docs, {.target_vocab = 1000});
  EXPECT_EQ(t.vocab_size(), 258u);  // ab, abc
}

TEST(TrainTest, Errors) {
  const std::vector<std::string> docs = {"abc"};
  EXPECT_THROW(train(PretokenizerSpec(), docs, {.target_vocab = 255}), ConfigError);
  const std::vector<std::string> none;
  EXPECT_THROW(train(PretokenizerSpec(), none, {.target_vocab = 300}), TrainingError);
  const std::vector<std::string> blank = {"", ""};
  EXPECT_THROW(train(PretokenizerSpec(), blank, {.target_vocab = 300}), TrainingError);
}

TEST(TrainTest, CharBudgetCountsScalars) {
  const std::vector<std::string> docs = {"h\xC3\xA9llo world", "ignored entirely"};
  const std::vector<std::string> cut = {"h\xC3\xA9llo"};
  const auto a = train(PretokenizerSpec(), docs, {.target_vocab = 300, .char_budget = 5});
  const auto b = train(PretokenizerSpec(), cut, {.target_vocab = 300});
  EXPECT_EQ(merge_bytes(a), merge_bytes(b));
}

TEST(TrainTest, MatchesReferenceTrainer) {
  for (Scheme s : {Scheme::kIdentity, Scheme::kGpt2, Scheme::kGpt4, Scheme::kPunct}) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      const auto docs = small_corpus(seed, 12);
      const PretokenizerSpec spec(s);
      const auto fast = train(spec, docs, {.target_vocab = 256 + 60});
      const auto slow = naive_train(spec, docs, 256 + 60);
      ASSERT_EQ(merge_bytes(fast), slow) << scheme_name(s) << " seed " << seed;
    }
  }
}

TEST(TrainTest, DeterministicAcrossThreadCounts) {
  const auto docs = small_corpus(9, 600);
  const PretokenizerSpec spec(Scheme::kGpt4);
  const auto one = train(spec, docs, {.target_vocab = 400, .threads = 1});
  const auto four = train(spec, docs, {.target_vocab = 400, .threads = 4});
  EXPECT_EQ(merge_bytes(one), merge_bytes(four));
  EXPECT_EQ(std::vector<Merge>(one.merges().begin(), one.merges().end()),
            std::vector<Merge>(four.merges().begin(), four.merges().end()));
}

TEST(TrainTest, SmallerVocabIsMergePrefix) {
  const auto docs = small_corpus(21, 80);
  const PretokenizerSpec spec(Scheme::kPunct);
  const auto small = train(spec, docs, {.target_vocab = 280});
  const auto large = train(spec, docs, {.target_vocab = 330});
  ASSERT_LE(small.merges().size(), large.merges().size());
  for (std::size_t i = 0; i < small.merges().size(); ++i) {
    ASSERT_EQ(small.merges()[i], large.merges()[i]);
  }
  for (const auto& d : docs) {
    EXPECT_LE(large.encode(d).size(), small.encode(d).size());
  }
  EXPECT_EQ(merge_bytes(large.truncated(small.merges().size())), merge_bytes(small));
}

TEST(TrainTest, TrainedTokensAreSingleChunks) {
  const auto docs = small_corpus(5, 100);
  for (Scheme s : {Scheme::kGpt2, Scheme::kGpt4, Scheme::kPunct}) {
    const PretokenizerSpec spec(s);
    const auto t = train(spec, docs, {.target_vocab = 400});
    EXPECT_EQ(t.vocab_size(), 256 + t.merges().size());
    for (std::size_t id = 256; id < t.vocab_size(); ++id) {
      EXPECT_TRUE(spec.validate_token(t.token_bytes(static_cast<TokenId>(id))))
          << scheme_name(s) << " token '" << t.token_bytes(static_cast<TokenId>(id)) << "'";
    }
  }
}

TEST(EncodeTest, ByteFallback) {
  const Tokenizer bytes;
  EXPECT_EQ(bytes.encode("hi"), (std::vector<TokenId>{104, 105}));
  const std::vector<TokenId> ids = {104, 105};
  EXPECT_EQ(bytes.decode(ids), "hi");
}

TEST(EncodeTest, MatchesReferenceEncoder) {
  const auto docs = small_corpus(33, 60);
  const PretokenizerSpec spec(Scheme::kGpt4);
  const auto t = train(spec, docs, {.target_vocab = 420});
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    const std::string text = docs[rng() % docs.size()] + testing::random_utf8(rng, 10);
    std::vector<TokenId> expected;
    for (auto c : spec.split(text)) {
      const auto ids = testing::naive_encode(t, c);
      expected.insert(expected.end(), ids.begin(), ids.end());
    }
    ASSERT_EQ(t.encode(text), expected);
  }
}

TEST(EncodeTest, OverlappingPairsMergeLeftFirst) {
  std::vector<std::string> vocab;
  for (int b = 0; b < 256; ++b) vocab.emplace_back(1, static_cast<char>(b));
  vocab.push_back("aa");
  const Tokenizer t(PretokenizerSpec(), vocab, {{'a', 'a', 256}});
  EXPECT_EQ(t.encode("aaa"), (std::vector<TokenId>{256, 'a'}));
  EXPECT_EQ(t.encode("aaaa"), (std::vector<TokenId>{256, 256}));
}

TEST(EncodeTest, DropoutExtremes) {
  const auto docs = small_corpus(2, 60);
  const auto t = train(PretokenizerSpec(Scheme::kGpt4), docs, {.target_vocab = 400});
  for (const auto& d : docs) {
    std::vector<TokenId> bytes;
    for (char c : d) bytes.push_back(static_cast<unsigned char>(c));
    EXPECT_EQ(t.encode(d, DropoutPolicy{1.0, 17}), bytes);
    EXPECT_EQ(t.encode(d, DropoutPolicy{0.0, 17}), t.encode(d));
  }
}

TEST(EncodeTest, DropoutIsSeededAndReversible) {
  const auto docs = small_corpus(4, 60);
  const auto t = train(PretokenizerSpec(), docs, {.target_vocab = 500});
  bool differs = false;
  std::mt19937_64 rng(99);
  for (const auto& d : docs) {
    const auto a = t.encode(d, DropoutPolicy{0.5, 1});
    EXPECT_EQ(a, t.encode(d, DropoutPolicy{0.5, 1}));
    EXPECT_EQ(t.decode(a), d);
    differs |= a != t.encode(d);
    const std::string noisy = d + testing::random_utf8(rng, 20);
    EXPECT_EQ(t.decode(t.encode(noisy, DropoutPolicy{0.5, rng()})), noisy);
  }
  EXPECT_TRUE(differs);
}

TEST(DecodeTest, RoundTripsWhitespaceHeavyCode) {
  const std::vector<std::string> docs = {"\t\tl.append(str(i))\n\t\tl.append(str(j))\n"};
  for (Scheme s : {Scheme::kIdentity, Scheme::kGpt2, Scheme::kGpt4, Scheme::kPunct}) {
    const auto t = train(PretokenizerSpec(s), docs, {.target_vocab = 300});
    EXPECT_EQ(t.decode(t.encode("\t\tl.append(str(i))")), "\t\tl.append(str(i))");
  }
}

TEST(DecodeTest, OutOfRangeNamesIndex) {
  const Tokenizer bytes;
  const std::vector<TokenId> ids = {104, 300, 105};
  try {
    bytes.decode(ids);
    FAIL() << "expected DecodeError";
  } catch (const DecodeError& e) {
    EXPECT_NE(std::string(e.what()).find("index 1"), std::string::npos) << e.what();
  }
}

TEST(TokenizerTest, ConstructorRejectsBrokenStructure) {
  std::vector<std::string> vocab;
  for (int b = 0; b < 256; ++b) vocab.emplace_back(1, static_cast<char>(b));
  auto with = [&](std::vector<std::string> extra, std::vector<Merge> merges) {
    auto v = vocab;
    v.insert(v.end(), extra.begin(), extra.end());
    return Tokenizer(PretokenizerSpec(), v, merges);
  };
  EXPECT_NO_THROW(with({"ab"}, {{'a', 'b', 256}}));
  EXPECT_THROW(with({"ab"}, {{'a', 'c', 256}}), ValidationError);
  EXPECT_THROW(with({"ab"}, {{'a', 'b', 257}}), ValidationError);
  EXPECT_THROW(with({"ab", "ab"}, {}), ValidationError);
  EXPECT_THROW(with({"ab", "abb"}, {{'a', 'b', 256}, {'a', 'b', 257}}), ValidationError);
  EXPECT_THROW(with({""}, {}), ValidationError);
  auto short_vocab = vocab;
  short_vocab.pop_back();
  EXPECT_THROW(Tokenizer(PretokenizerSpec(), short_vocab, {}), ValidationError);
  // Unreachable extension tokens are allowed.
  EXPECT_NO_THROW(with({"xyz"}, {}));
}

}  // namespace
}  // namespace toksmith
