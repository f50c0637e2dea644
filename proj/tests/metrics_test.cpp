#include "toksmith/metrics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <nlohmann/json.hpp>

#include "test_util.hpp"
#include "toksmith/error.hpp"
#include "toksmith/trainer.hpp"

namespace toksmith {
namespace {

TEST(NslTest, RatioOfSums) {
  const std::vector<std::size_t> cand = {3, 5};
  const std::vector<std::size_t> base = {4, 6};
  EXPECT_DOUBLE_EQ(nsl_from_lengths(cand, base), 0.8);
  // Not the mean of per-document ratios (0.75 + 0.8333) / 2.
  const std::vector<std::size_t> one = {1, 9};
  const std::vector<std::size_t> two = {2, 9};
  EXPECT_DOUBLE_EQ(nsl_from_lengths(one, two), 10.0 / 11.0);
}

TEST(NslTest, Errors) {
  const std::vector<std::size_t> a = {1, 2};
  const std::vector<std::size_t> b = {1};
  const std::vector<std::size_t> zeros = {0, 0};
  EXPECT_THROW(nsl_from_lengths(a, b), ValidationError);
  EXPECT_THROW(nsl_from_lengths(a, zeros), ValidationError);
  EXPECT_THROW(nsl_from_lengths({}, {}), ValidationError);
}

TEST(NslTest, SelfAndReciprocal) {
  const std::vector<std::string> docs = {"the quick brown fox jumps over the lazy dog\n",
                                         "def f(x):\n    return x * 2\n", "12345 + 67890 = 80235"};
  const Tokenizer a = train(PretokenizerSpec(Scheme::kGpt4), docs, {.target_vocab = 300});
  const Tokenizer b = train(PretokenizerSpec(Scheme::kGpt2), docs, {.target_vocab = 280});
  EXPECT_DOUBLE_EQ(nsl(a, a, docs), 1.0);
  EXPECT_NEAR(nsl(a, b, docs) * nsl(b, a, docs), 1.0, 1e-12);
  EXPECT_LT(nsl(a, Tokenizer(), docs), 1.0);
}

TEST(BytesPerTokenTest, Examples) {
  const Tokenizer bytes;
  const std::vector<std::string> docs = {"hello", "wörld"};
  EXPECT_DOUBLE_EQ(bytes_per_token(bytes, docs), 1.0);

  std::vector<std::string> vocab;
  for (int b = 0; b < 256; ++b) vocab.emplace_back(1, static_cast<char>(b));
  vocab.insert(vocab.end(), {"ab", "cd", "abcd", "\xC3\xA9", "h\xC3\xA9", "ll"});
  const Tokenizer t(PretokenizerSpec(), vocab,
                    {{'a', 'b', 256}, {'c', 'd', 257}, {256, 257, 258},
                     {0xC3, 0xA9, 259}, {'h', 259, 260}, {'l', 'l', 261}});
  const std::vector<std::string> abcd = {"abcd"};
  EXPECT_DOUBLE_EQ(bytes_per_token(t, abcd), 4.0);
  const std::vector<std::string> hello = {"h\xC3\xA9llo"};  // 6 bytes
  EXPECT_EQ(t.encode(hello[0]).size(), 3u);
  EXPECT_DOUBLE_EQ(bytes_per_token(t, hello), 2.0);
}

TEST(RenyiTest, Extremes) {
  const std::vector<std::uint64_t> uniform = {5, 5, 5, 5};
  EXPECT_NEAR(renyi_efficiency(uniform, 4), 1.0, 1e-12);
  const std::vector<std::uint64_t> single = {0, 9, 0, 0};
  EXPECT_NEAR(renyi_efficiency(single, 4), 0.0, 1e-12);
}

TEST(RenyiTest, FrozenValues) {
  const std::vector<std::uint64_t> skew = {3, 1};
  EXPECT_NEAR(renyi_efficiency(skew, 4), 0.31596406122824133, 1e-12);
  const std::vector<std::uint64_t> dyadic = {4, 2, 1, 1};
  EXPECT_NEAR(renyi_efficiency(dyadic, 8), 0.4867781474932645, 1e-12);
}

TEST(RenyiTest, Errors) {
  const std::vector<std::uint64_t> c = {1, 1};
  EXPECT_THROW(renyi_efficiency(c, 2, 1.0), ConfigError);
  EXPECT_THROW(renyi_efficiency(c, 2, -1.0), ConfigError);
  EXPECT_THROW(renyi_efficiency(c, 1), ValidationError);
  const std::vector<std::uint64_t> z = {0, 0};
  EXPECT_THROW(renyi_efficiency(z, 2), ValidationError);
}

TEST(SummarizeTest, UnweightedMeans) {
  CompressionReport r;
  r.per_subset[{"a", "x"}].nsl = 1.0;
  r.per_subset[{"a", "y"}].nsl = 2.0;
  r.per_subset[{"b", "z"}].nsl = 4.0;
  r.per_subset[{"a", "x"}].bytes_per_token = 3.0;
  r.per_subset[{"a", "y"}].bytes_per_token = 5.0;
  r.per_subset[{"b", "z"}].bytes_per_token = 1.0;
  summarize(r);
  EXPECT_DOUBLE_EQ(r.per_category.at("a").nsl, 1.5);
  EXPECT_DOUBLE_EQ(r.per_category.at("b").nsl, 4.0);
  EXPECT_DOUBLE_EQ(r.overall.nsl, 2.75);
  EXPECT_DOUBLE_EQ(r.overall.bytes_per_token, 2.5);
}

TEST(EvaluateTest, PerSubsetMatchesDirectComputation) {
  testing::TempDir dir;
  dir.write("c/p/a.txt", "import os\nprint(os.getcwd())\n");
  dir.write("c/p/b.txt", "for i in range(10):\n    print(i)\n");
  dir.write("c/q/a.txt", "int main() { return 0; }\n");
  dir.write("c/q/b.txt", "std::vector<int> v{1, 2, 3};\n");
  dir.write("e/r/a.txt", "The cat sat on the mat.\n");
  dir.write("e/r/b.txt", "It was the best of times, it was the worst of times.\n");
  dir.write("m.json", R"({"categories": {
      "c": {"p": {"files": ["c/p/*"], "holdout": 1}, "q": {"files": ["c/q/*"], "holdout": 1}},
      "e": {"r": {"files": ["e/r/*"], "holdout": 1}}}})");
  const auto manifest = CorpusManifest::load(dir.path() / "m.json");

  std::vector<std::string> train_docs;
  for (const auto& c : manifest.categories()) {
    for (const auto& s : c.subsets) {
      for (auto& d : read_documents(s.train_files())) train_docs.push_back(d);
    }
  }
  const Tokenizer base = train(PretokenizerSpec(Scheme::kGpt4), train_docs, {.target_vocab = 300});
  const Tokenizer other = train(PretokenizerSpec(), train_docs, {.target_vocab = 300});
  const std::vector<NamedTokenizer> toks = {{"base", base}, {"other", other}};

  for (unsigned threads : {1u, 3u}) {
    const auto reports = evaluate(toks, base, manifest, threads);
    ASSERT_EQ(reports.size(), 2u);
    EXPECT_DOUBLE_EQ(reports[0].overall.nsl, 1.0);
    double cat_c = 0.0;
    for (const char* s : {"p", "q"}) {
      const auto docs = read_documents(manifest.find("c")->subsets[s[0] == 'p' ? 0 : 1].holdout_files());
      const auto& m = reports[1].per_subset.at({"c", s});
      EXPECT_DOUBLE_EQ(m.nsl, nsl(other, base, docs));
      EXPECT_DOUBLE_EQ(m.bytes_per_token, bytes_per_token(other, docs));
      EXPECT_DOUBLE_EQ(m.renyi, renyi_efficiency(other, docs));
      cat_c += m.nsl / 2.0;
    }
    EXPECT_DOUBLE_EQ(reports[1].per_category.at("c").nsl, cat_c);
    EXPECT_DOUBLE_EQ(reports[1].overall.nsl,
                     (cat_c + reports[1].per_category.at("e").nsl) / 2.0);
  }

  const auto reports = evaluate(toks, base, manifest);
  const auto json = nlohmann::json::parse(report_json(reports));
  EXPECT_TRUE(json.is_array() || json.is_object());
  const std::string table = report_table(reports);
  EXPECT_NE(table.find("base"), std::string::npos);
  EXPECT_NE(table.find("1.00"), std::string::npos);
}

}  // namespace
}  // namespace toksmith
