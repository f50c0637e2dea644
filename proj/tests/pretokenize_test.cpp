#include "toksmith/pretokenize.hpp"

#include <gtest/gtest.h>
#include <unicode/regex.h>

#include <map>
#include <memory>
#include <random>

#include "test_util.hpp"
#include "toksmith/error.hpp"

namespace toksmith {
namespace {

using Chunks = std::vector<std::string>;

Chunks split(Scheme scheme, std::string_view text) {
  const PretokenizerSpec spec(scheme);
  Chunks out;
  for (auto c : spec.split(text)) out.emplace_back(c);
  return out;
}

std::string join(const std::vector<std::string_view>& chunks) {
  std::string out;
  for (auto c : chunks) out += c;
  return out;
}

TEST(PretokenizeTest, DigitRuns) {
  EXPECT_EQ(split(Scheme::kGpt4, "1000"), (Chunks{"100", "0"}));
  EXPECT_EQ(split(Scheme::kPunct, "1000"), (Chunks{"100", "0"}));
  EXPECT_EQ(split(Scheme::kGpt2, "1000"), (Chunks{"1000"}));
}

TEST(PretokenizeTest, LeadingPunctuationOnLetters) {
  EXPECT_EQ(split(Scheme::kGpt4, ".append"), (Chunks{".append"}));
  EXPECT_EQ(split(Scheme::kPunct, ".append"), (Chunks{".", "append"}));
  EXPECT_EQ(split(Scheme::kGpt2, ".append"), (Chunks{".", "append"}));
}

TEST(PretokenizeTest, IdentityIsOneChunk) {
  EXPECT_EQ(split(Scheme::kIdentity, "import numpy\nas np"), (Chunks{"import numpy\nas np"}));
  EXPECT_TRUE(PretokenizerSpec().split("").empty());
}

// Expected chunks computed with the Python `regex` module running the
// canonical pattern strings.
TEST(PretokenizeTest, MatchesReferenceEngine) {
  struct Case {
    Scheme scheme;
    std::string text;
    Chunks expected;
  };
  const std::vector<Case> cases = {
      {Scheme::kGpt2, "\t\tl.append(str(i))\n",
       {"\t", "\t", "l", ".", "append", "(", "str", "(", "i", "))", "\n"}},
      {Scheme::kGpt2, "Hello world  it's   fine\n\n  x",
       {"Hello", " world", " ", " it", "'s", "  ", " fine", "\n\n ", " x"}},
      {Scheme::kGpt2, "We'RE 12345 dogs!!\r\n", {"We", "'", "RE", " 12345", " dogs", "!!", "\r\n"}},
      {Scheme::kGpt4, "\t\tl.append(str(i))\n", {"\t", "\tl", ".append", "(str", "(i", "))\n"}},
      {Scheme::kGpt4, "Hello world  it's   fine\n\n  x",
       {"Hello", " world", " ", " it", "'s", "  ", " fine", "\n\n", " ", " x"}},
      {Scheme::kGpt4, "We'RE 12345 dogs!!\r\n", {"We", "'RE", " ", "123", "45", " dogs", "!!\r\n"}},
      {Scheme::kGpt4, "naïve café 東京 🙂🙂 done",
       {"naïve", " café", " 東京", " 🙂🙂", " done"}},
      {Scheme::kPunct, "\t\tl.append(str(i))\n",
       {"\t", "\t", "l", ".", "append", "(", "str", "(", "i", "))\n"}},
      {Scheme::kPunct, "Hello world  it's   fine\n\n  x",
       {"Hello", " world", " ", " it", "'", "s", "  ", " fine", "\n\n", " ", " x"}},
      {Scheme::kPunct, "We'RE 12345 dogs!!\r\n", {"We", "'", "RE", " ", "123", "45", " dogs", "!!\r\n"}},
  };
  for (const auto& c : cases) {
    EXPECT_EQ(split(c.scheme, c.text), c.expected)
        << scheme_name(c.scheme) << " on '" << c.text << "'";
  }
}

TEST(PretokenizeTest, CustomPatternResidueKeepsEverything) {
  const PretokenizerSpec spec(Scheme::kCustom, "[a-z]+");
  const auto chunks = spec.split("abc 12 de!");
  ASSERT_EQ(chunks.size(), 4u);
  EXPECT_EQ(chunks[0], "abc");
  EXPECT_EQ(chunks[1], " 12 ");
  EXPECT_EQ(chunks[2], "de");
  EXPECT_EQ(chunks[3], "!");
  EXPECT_EQ(join(chunks), "abc 12 de!");
}

TEST(PretokenizeTest, EmptyMatchesAreIgnored) {
  const PretokenizerSpec spec(Scheme::kCustom, "x*");
  EXPECT_EQ(join(spec.split("axxbx")), "axxbx");
}

TEST(PretokenizeTest, ConfigurationErrors) {
  EXPECT_THROW(PretokenizerSpec(Scheme::kCustom, "("), ConfigError);
  EXPECT_THROW(PretokenizerSpec(Scheme::kCustom, ""), ConfigError);
  EXPECT_THROW(PretokenizerSpec(Scheme::kGpt4, "abc"), ConfigError);
  EXPECT_THROW(PretokenizerSpec::from_name("gpt5"), ConfigError);
  EXPECT_EQ(PretokenizerSpec::from_name("punct").scheme(), Scheme::kPunct);
}

TEST(PretokenizeTest, SchemeNamesRoundTrip) {
  for (Scheme s : {Scheme::kIdentity, Scheme::kGpt2, Scheme::kGpt4, Scheme::kPunct,
                   Scheme::kCustom}) {
    EXPECT_EQ(parse_scheme(scheme_name(s)), s);
  }
}

TEST(PretokenizeTest, ValidateToken) {
  const PretokenizerSpec gpt4(Scheme::kGpt4);
  EXPECT_FALSE(gpt4.validate_token("1000"));
  EXPECT_FALSE(gpt4.validate_token("12345"));
  EXPECT_TRUE(gpt4.validate_token("100"));
  EXPECT_TRUE(gpt4.validate_token(".append"));
  EXPECT_TRUE(gpt4.validate_token("\xE4\xB8"));  // truncated UTF-8 passes
  EXPECT_FALSE(PretokenizerSpec(Scheme::kPunct).validate_token(".append"));
  const PretokenizerSpec identity;
  EXPECT_TRUE(identity.validate_token("anything at all\n\t 1234567"));
  EXPECT_TRUE(identity.validate_token("\xFF\xFE"));
}

class SchemeFuzz : public ::testing::TestWithParam<Scheme> {};

TEST_P(SchemeFuzz, ChunksConcatenateToInput) {
  const PretokenizerSpec spec(GetParam());
  std::mt19937_64 rng(7);
  for (int i = 0; i < 3000; ++i) {
    const std::string text = testing::random_utf8(rng, 60);
    const auto chunks = spec.split(text);
    ASSERT_EQ(join(chunks), text);
    for (auto c : chunks) ASSERT_FALSE(c.empty());
  }
}

TEST_P(SchemeFuzz, ValidateAgreesWithSplit) {
  const PretokenizerSpec spec(GetParam());
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const std::string text = testing::random_utf8(rng, 6);
    if (text.empty()) continue;
    ASSERT_EQ(spec.validate_token(text), spec.split(text).size() == 1);
  }
}

INSTANTIATE_TEST_SUITE_P(AllSchemes, SchemeFuzz,
                         ::testing::Values(Scheme::kIdentity, Scheme::kGpt2, Scheme::kGpt4,
                                           Scheme::kPunct),
                         [](const auto& info) { return std::string(scheme_name(info.param)); });

// Property checks use independent ICU matchers on each chunk.
bool full_match(const char* pattern, std::string_view chunk) {
  static std::map<std::string, std::unique_ptr<icu::RegexPattern>> cache;
  auto& compiled = cache[pattern];
  UErrorCode status = U_ZERO_ERROR;
  if (!compiled) {
    UParseError pe;
    compiled.reset(icu::RegexPattern::compile(icu::UnicodeString::fromUTF8(pattern), 0, pe, status));
    if (U_FAILURE(status)) ADD_FAILURE() << "bad pattern " << pattern;
  }
  const icu::UnicodeString text =
      icu::UnicodeString::fromUTF8(icu::StringPiece(chunk.data(), static_cast<int32_t>(chunk.size())));
  std::unique_ptr<icu::RegexMatcher> m(compiled->matcher(text, status));
  return U_SUCCESS(status) && m->matches(status);
}

TEST(PretokenizeTest, DigitChunksHaveAtMostThreeDigits) {
  std::mt19937_64 rng(3);
  for (Scheme s : {Scheme::kGpt4, Scheme::kPunct}) {
    const PretokenizerSpec spec(s);
    for (int i = 0; i < 2000; ++i) {
      std::string text = testing::random_utf8(rng, 30);
      text += std::to_string(rng());
      for (auto c : spec.split(text)) {
        if (full_match("\\p{N}+", c)) {
          ASSERT_LE(utf8::count_scalars(c), 3u) << c;
        }
        // No digit run longer than three anywhere in a chunk.
        ASSERT_FALSE(full_match(".*\\p{N}{4}.*", c)) << c;
      }
    }
  }
}

TEST(PretokenizeTest, PunctNeverGluesPunctuationOrTabToLetters) {
  const PretokenizerSpec spec(Scheme::kPunct);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 3000; ++i) {
    const std::string text = testing::random_utf8(rng, 40) + "\t\tx.append(y)";
    for (auto c : spec.split(text)) {
      ASSERT_FALSE(full_match("[^\\p{White_Space}\\p{L}\\p{N}]\\p{L}+", c)) << c;
      ASSERT_FALSE(full_match("\\t\\p{L}+", c)) << c;
    }
  }
}

}  // namespace
}  // namespace toksmith
