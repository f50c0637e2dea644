#include "toksmith/persistence.hpp"

#include <gtest/gtest.h>

#include <cstring>
#include <nlohmann/json.hpp>
#include <random>

#include "test_util.hpp"
#include "toksmith/error.hpp"
#include "toksmith/trainer.hpp"

namespace toksmith {
namespace {

std::string byte_vocab_json(const std::string& merges, const std::string& extra_vocab = "") {
  nlohmann::json vocab = nlohmann::json::array();
  for (int b = 0; b < 256; ++b) vocab.push_back(base64_encode(std::string(1, static_cast<char>(b))));
  std::string v = vocab.dump();
  if (!extra_vocab.empty()) v.insert(v.size() - 1, "," + extra_vocab);
  return R"({"version": 1, "scheme": "identity", "vocab": )" + v + R"(, "merges": )" + merges + "}";
}

std::string expect_parse_error(const std::string& text) {
  try {
    parse_tokenizer(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  ADD_FAILURE() << "no ParseError for " << text.substr(0, 80);
  return {};
}

TEST(Base64Test, KnownVectors) {
  EXPECT_EQ(base64_encode(""), "");
  EXPECT_EQ(base64_encode("f"), "Zg==");
  EXPECT_EQ(base64_encode("fo"), "Zm8=");
  EXPECT_EQ(base64_encode("foo"), "Zm9v");
  EXPECT_EQ(base64_encode(std::string("\xff\x00", 2)), "/wA=");
  EXPECT_EQ(base64_decode("Zm9vYmFy"), "foobar");
  EXPECT_THROW(base64_decode("Zm9"), ParseError);
  EXPECT_THROW(base64_decode("Zm9*"), ParseError);
  EXPECT_THROW(base64_decode("Zm9=Zm9v"), ParseError);
  EXPECT_THROW(base64_decode("Zh=="), ParseError);  // non-zero padding bits
}

TEST(TokenizerFileTest, ZeroMergeRoundTrip) {
  const Tokenizer t{PretokenizerSpec(Scheme::kGpt2)};
  const Tokenizer back = parse_tokenizer(serialize_tokenizer(t));
  EXPECT_EQ(back.vocab_size(), 256u);
  EXPECT_TRUE(back.merges().empty());
  EXPECT_EQ(back.spec(), t.spec());
}

TEST(TokenizerFileTest, TrainedRoundTripIsByteIdentical) {
  const std::vector<std::string> docs = {"the cat sat on the mat, 12345 times.\n\tdef f(x): return x\n",
                                         "Привет мир, 東京 🙂"};
  for (Scheme s : {Scheme::kIdentity, Scheme::kGpt2, Scheme::kGpt4, Scheme::kPunct}) {
    const auto t = train(PretokenizerSpec(s), docs, {.target_vocab = 320});
    testing::TempDir dir;
    const auto path = dir.path() / "tok.json";
    save_tokenizer(t, path);
    const Tokenizer back = load_tokenizer(path);
    EXPECT_EQ(serialize_tokenizer(back), read_file(path));
    EXPECT_EQ(back.spec(), t.spec());
    ASSERT_EQ(back.vocab_size(), t.vocab_size());
    for (std::size_t i = 0; i < t.vocab_size(); ++i) EXPECT_EQ(back.vocab()[i], t.vocab()[i]);
    EXPECT_EQ(back.encode(docs[0]), t.encode(docs[0]));
  }
}

TEST(TokenizerFileTest, CustomPatternRoundTrip) {
  const Tokenizer t{PretokenizerSpec(Scheme::kCustom, R"(\p{L}+|\p{N}|\s+)")};
  const Tokenizer back = parse_tokenizer(serialize_tokenizer(t));
  EXPECT_EQ(back.spec().pattern(), t.spec().pattern());
  EXPECT_EQ(back.spec().scheme(), Scheme::kCustom);
}

TEST(TokenizerFileTest, RejectsMalformedContent) {
  EXPECT_NO_THROW(parse_tokenizer(byte_vocab_json("[]")));
  EXPECT_NO_THROW(parse_tokenizer(byte_vocab_json("[[97, 98, 256]]", "\"YWI=\"")));

  EXPECT_NE(expect_parse_error(byte_vocab_json("[[97, 98, 300]]", "\"YWI=\"")).find("merges[0]"),
            std::string::npos);
  EXPECT_NE(expect_parse_error(byte_vocab_json("[[97, -1, 256]]", "\"YWI=\"")).find("merges[0][1]"),
            std::string::npos);
  EXPECT_NE(expect_parse_error(byte_vocab_json("[[97, 98]]", "\"YWI=\"")).find("merges[0]"),
            std::string::npos);
  EXPECT_NE(expect_parse_error(byte_vocab_json("[]", "\"@@@@\"")).find("vocab[256]"),
            std::string::npos);
  expect_parse_error("{");
  expect_parse_error("[]");
  expect_parse_error(R"({"version": 1, "scheme": "gpt4", "vocab": [], "merges": []})");
  EXPECT_EQ(expect_parse_error(R"({"version": 1, "scheme": "gpt4", "vocab": [], "merges": [], "extra": 0})"),
            "extra: unknown field");
  EXPECT_NE(expect_parse_error(R"({"version": 1, "scheme": "bogus", "vocab": [], "merges": []})").find("scheme"),
            std::string::npos);
}

TEST(TokenizerFileTest, VersionMismatch) {
  std::string text = byte_vocab_json("[]");
  text.replace(text.find("\"version\": 1"), 12, "\"version\": 2");
  EXPECT_THROW(parse_tokenizer(text), UnsupportedVersionError);
}

TEST(TokenizerFileTest, MissingFile) {
  testing::TempDir dir;
  EXPECT_THROW(load_tokenizer(dir.path() / "nope.json"), IoError);
}

TEST(EmbeddingFileTest, ZeroMatrixLayout) {
  const EmbeddingMatrix m(2, 3);
  const std::string bytes = serialize_embeddings(m);
  ASSERT_EQ(bytes.size(), 36u);
  EXPECT_EQ(bytes.substr(0, 4), "EMB1");
  EXPECT_EQ(bytes.substr(4, 8), std::string("\x02\x00\x00\x00\x03\x00\x00\x00", 8));
  EXPECT_EQ(bytes.substr(12), std::string(24, '\0'));
}

TEST(EmbeddingFileTest, RandomRoundTripIsBitwise) {
  std::mt19937_64 rng(5);
  std::normal_distribution<float> dist(0.0f, 3.0f);
  std::vector<float> values(20);
  for (auto& v : values) v = dist(rng);
  values[3] = -0.0f;
  values[7] = 1e-42f;  // subnormal
  const EmbeddingMatrix m(5, 4, values);
  testing::TempDir dir;
  save_embeddings(m, dir.path() / "e.bin");
  const EmbeddingMatrix back = load_embeddings(dir.path() / "e.bin");
  ASSERT_EQ(back.rows(), 5u);
  ASSERT_EQ(back.cols(), 4u);
  EXPECT_EQ(std::memcmp(back.values().data(), values.data(), values.size() * sizeof(float)), 0);
  EXPECT_FLOAT_EQ(back.row(1)[2], values[6]);
}

TEST(EmbeddingFileTest, RejectsDamagedFiles) {
  const std::string good = serialize_embeddings(EmbeddingMatrix(5, 4));
  EXPECT_THROW(parse_embeddings(good.substr(0, good.size() - 1)), ParseError);
  EXPECT_THROW(parse_embeddings(good + "x"), ParseError);
  EXPECT_THROW(parse_embeddings(good.substr(0, 8)), ParseError);
  std::string bad_magic = good;
  bad_magic[3] = '2';
  EXPECT_THROW(parse_embeddings(bad_magic), ParseError);
  std::string zero_rows = good;
  zero_rows[4] = '\0';
  EXPECT_THROW(parse_embeddings(zero_rows.substr(0, 12)), ParseError);
  std::string nan = good;
  const float q = std::numeric_limits<float>::quiet_NaN();
  std::memcpy(nan.data() + 12, &q, 4);
  EXPECT_THROW(parse_embeddings(nan), ParseError);
}

}  // namespace
}  // namespace toksmith
