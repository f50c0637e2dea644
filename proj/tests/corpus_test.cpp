#include "toksmith/corpus.hpp"

#include <gtest/gtest.h>

#include <set>

#include "test_util.hpp"
#include "toksmith/error.hpp"

namespace toksmith {
namespace {

namespace fs = std::filesystem;

// Writes `n` files of `size` bytes each under dir/category/subset.
void populate(const testing::TempDir& dir, const std::string& cat, const std::string& sub,
              std::size_t n, std::size_t size, char fill) {
  for (std::size_t i = 0; i < n; ++i) {
    dir.write(cat + "/" + sub + "/doc" + std::to_string(i) + ".txt",
              std::string(size, fill) + "|" + std::to_string(i));
  }
}

TEST(ManifestTest, HoldoutIsLastFilesInSortedOrder) {
  testing::TempDir dir;
  dir.write("c/s/b.txt", "b");
  dir.write("c/s/a.txt", "a");
  dir.write("c/s/c.txt", "c");
  dir.write("manifest.json", R"({"categories": {"c": {"s": {"files": ["c/s/*.txt"], "holdout": 1}}}})");
  const auto m = CorpusManifest::load(dir.path() / "manifest.json");
  ASSERT_EQ(m.categories().size(), 1u);
  const Subset& s = m.categories()[0].subsets[0];
  ASSERT_EQ(s.train_files().size(), 2u);
  ASSERT_EQ(s.holdout_files().size(), 1u);
  EXPECT_EQ(s.train_files()[0].filename(), "a.txt");
  EXPECT_EQ(s.train_files()[1].filename(), "b.txt");
  EXPECT_EQ(s.holdout_files()[0].filename(), "c.txt");
  EXPECT_EQ(read_documents(s.holdout_files()), std::vector<std::string>{"c"});
}

TEST(ManifestTest, CountsEvaluationSubsets) {
  testing::TempDir dir;
  for (const char* c : {"x", "y"}) {
    for (const char* s : {"p", "q"}) populate(dir, c, s, 2, 3, 'z');
  }
  dir.write("m.json", R"({"version": 1, "categories": {
      "x": {"p": {"files": ["x/p/*"], "holdout": 1}, "q": {"files": ["x/q/doc0.txt", "x/q/doc1.txt"], "holdout": 1}},
      "y": {"p": {"files": ["y/p/doc?.txt"], "holdout": 1}, "q": {"files": ["y/q/doc[01].txt"], "holdout": 1}}}})");
  const auto m = CorpusManifest::load(dir.path() / "m.json");
  std::size_t eval_subsets = 0;
  for (const auto& c : m.categories()) {
    for (const auto& s : c.subsets) eval_subsets += s.holdout_count > 0;
  }
  EXPECT_EQ(eval_subsets, 4u);
  ASSERT_NE(m.find("y"), nullptr);
  EXPECT_EQ(m.find("z"), nullptr);
}

TEST(ManifestTest, Errors) {
  testing::TempDir dir;
  populate(dir, "c", "s", 3, 2, 'a');
  auto load = [&](const std::string& json) {
    dir.write("m.json", json);
    return CorpusManifest::load(dir.path() / "m.json");
  };
  EXPECT_THROW(load(R"({"categories": {"c": {"s": {"files": ["c/s/*"], "holdout": 4}}}})"),
               ValidationError);
  EXPECT_THROW(load(R"({"categories": {"c": {"s": {"files": ["c/s/missing.txt"]}}}})"),
               ValidationError);
  EXPECT_THROW(load(R"({"categories": {"c": {"s": {"files": ["c/*/doc0.txt"]}}}})"), ParseError);
  EXPECT_THROW(load(R"({"categories": {"c": {"s": {"files": ["c/s/*"], "holdout": -1}}}})"),
               ParseError);
  EXPECT_THROW(load(R"({"categories": {"c": {"s": {"files": ["c/s/*"], "hold": 1}}}})"),
               ParseError);
  EXPECT_THROW(load(R"({"categories": [])"), ParseError);
  EXPECT_THROW(CorpusManifest::load(dir.path() / "absent.json"), Error);
}

TEST(MixTest, ParseAndValidate) {
  const auto w = parse_weights("code=0.7, english=0.3");
  EXPECT_DOUBLE_EQ(w.at("code"), 0.7);
  EXPECT_DOUBLE_EQ(w.at("english"), 0.3);
  EXPECT_THROW(parse_weights("code"), ConfigError);
  EXPECT_THROW(parse_weights("code=abc"), ConfigError);
  EXPECT_THROW(parse_weights("code=0.5,code=0.5"), ConfigError);

  EXPECT_NO_THROW((MixSpec{{{"code", 1.0}}, 10}.validate()));
  EXPECT_THROW((MixSpec{{{"code", 0.6}, {"english", 0.3}}, 10}.validate()), ConfigError);
  EXPECT_THROW((MixSpec{{{"code", 1.2}, {"english", -0.2}}, 10}.validate()), ConfigError);
  EXPECT_THROW((MixSpec{{}, 10}.validate()), ConfigError);
}

class SamplerTest : public ::testing::Test {
 protected:
  void SetUp() override {
    populate(dir_, "code", "py", 10, 97, 'c');
    populate(dir_, "english", "prose", 10, 131, 'e');
    dir_.write("m.json", R"({"categories": {
        "code": {"py": {"files": ["code/py/*.txt"], "holdout": 3}},
        "english": {"prose": {"files": ["english/prose/*.txt"], "holdout": 3}}}})");
    manifest_ = CorpusManifest::load(dir_.path() / "m.json");
  }

  std::vector<std::string> drain(MixSampler& sampler) {
    std::vector<std::string> out;
    while (auto d = sampler.next()) out.push_back(std::move(*d));
    return out;
  }

  testing::TempDir dir_;
  CorpusManifest manifest_;
};

TEST_F(SamplerTest, SingleCategoryMix) {
  MixSampler s(manifest_, MixSpec{{{"code", 1.0}}, 1000}, 1);
  std::size_t chars = 0;
  for (const auto& d : drain(s)) {
    EXPECT_EQ(d.front(), 'c');
    chars += d.size();
  }
  EXPECT_EQ(chars, 1000u);
  EXPECT_EQ(s.emitted().at("code"), 1000u);
}

TEST_F(SamplerTest, SplitMatchesWeights) {
  MixSampler s(manifest_, MixSpec{{{"code", 0.7}, {"english", 0.3}}, 10000}, 7);
  std::size_t code = 0, english = 0;
  for (const auto& d : drain(s)) (d.front() == 'c' ? code : english) += d.size();
  EXPECT_GE(code, 6900u);
  EXPECT_LE(code, 7100u);
  EXPECT_GE(english, 2900u);
  EXPECT_LE(english, 3100u);
}

TEST_F(SamplerTest, NeverEmitsHoldout) {
  std::set<std::string> holdout;
  for (const auto& c : manifest_.categories()) {
    for (const auto& d : read_documents(c.subsets[0].holdout_files())) holdout.insert(d);
  }
  MixSampler s(manifest_, MixSpec{{{"code", 0.5}, {"english", 0.5}}, 20000}, 3);
  for (const auto& d : drain(s)) {
    for (const auto& h : holdout) {
      // Truncated documents are prefixes, so compare on the unique suffix tag.
      EXPECT_EQ(d.find(h.substr(h.find('|'))), std::string::npos);
    }
  }
}

TEST_F(SamplerTest, SeedDeterminesOrder) {
  MixSampler a(manifest_, MixSpec{{{"code", 0.5}, {"english", 0.5}}, 2000}, 11);
  MixSampler b(manifest_, MixSpec{{{"code", 0.5}, {"english", 0.5}}, 2000}, 11);
  MixSampler c(manifest_, MixSpec{{{"code", 0.5}, {"english", 0.5}}, 2000}, 12);
  const auto da = drain(a);
  EXPECT_EQ(da, drain(b));
  EXPECT_NE(da, drain(c));
}

TEST_F(SamplerTest, UnknownCategory) {
  EXPECT_THROW(MixSampler(manifest_, MixSpec{{{"math", 1.0}}, 10}, 1), ConfigError);
}

}  // namespace
}  // namespace toksmith
