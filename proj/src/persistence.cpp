#include "toksmith/persistence.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "toksmith/error.hpp"

namespace toksmith {
namespace {

using nlohmann::json;

constexpr char kAlphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
constexpr std::array<char, 4> kEmbeddingMagic = {'E', 'M', 'B', '1'};
constexpr std::size_t kEmbeddingHeader = 12;

int base64_value(char c) {
  if (c >= 'A' && c <= 'Z') return c - 'A';
  if (c >= 'a' && c <= 'z') return c - 'a' + 26;
  if (c >= '0' && c <= '9') return c - '0' + 52;
  if (c == '+') return 62;
  if (c == '/') return 63;
  return -1;
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

std::uint32_t get_u32(std::string_view in, std::size_t offset) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) {
    v |= static_cast<std::uint32_t>(static_cast<unsigned char>(in[offset + i])) << (8 * i);
  }
  return v;
}

const json& require(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string(key) + ": missing field");
  return *it;
}

TokenId parse_id(const json& value, const std::string& path) {
  if (!value.is_number_unsigned()) {
    throw ParseError(path + ": expected a non-negative integer");
  }
  const auto id = value.get<std::uint64_t>();
  if (id > std::numeric_limits<TokenId>::max()) throw ParseError(path + ": id too large");
  return static_cast<TokenId>(id);
}

}  // namespace

std::string base64_encode(std::string_view bytes) {
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 2 < bytes.size(); i += 3) {
    const std::uint32_t v = (static_cast<unsigned char>(bytes[i]) << 16) |
                            (static_cast<unsigned char>(bytes[i + 1]) << 8) |
                            static_cast<unsigned char>(bytes[i + 2]);
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
    out += kAlphabet[(v >> 6) & 63];
    out += kAlphabet[v & 63];
  }
  const std::size_t rest = bytes.size() - i;
  if (rest > 0) {
    std::uint32_t v = static_cast<unsigned char>(bytes[i]) << 16;
    if (rest == 2) v |= static_cast<unsigned char>(bytes[i + 1]) << 8;
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
    out += rest == 2 ? kAlphabet[(v >> 6) & 63] : '=';
    out += '=';
  }
  return out;
}

std::string base64_decode(std::string_view text) {
  if (text.size() % 4 != 0) throw ParseError("base64 length is not a multiple of 4");
  std::string out;
  out.reserve(text.size() / 4 * 3);
  for (std::size_t i = 0; i < text.size(); i += 4) {
    const bool last = i + 4 == text.size();
    int pad = 0;
    std::uint32_t v = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      const char c = text[i + k];
      if (c == '=' && last && k >= 2) {
        ++pad;
        v <<= 6;
        continue;
      }
      const int d = base64_value(c);
      if (d < 0 || pad > 0) throw ParseError("invalid base64 character");
      v = (v << 6) | static_cast<std::uint32_t>(d);
    }
    out += static_cast<char>((v >> 16) & 0xFF);
    if (pad < 2) out += static_cast<char>((v >> 8) & 0xFF);
    if (pad < 1) out += static_cast<char>(v & 0xFF);
  }
  if (base64_encode(out) != text) throw ParseError("non-canonical base64");
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::string serialize_tokenizer(const Tokenizer& tokenizer) {
  const auto& spec = tokenizer.spec();
  std::string out = "{\n";
  out += "  \"version\": " + std::to_string(kTokenizerFileVersion) + ",\n";
  out += "  \"scheme\": " + json(std::string(spec.name())).dump() + ",\n";
  if (spec.scheme() == Scheme::kCustom) {
    out += "  \"pattern\": " + json(spec.pattern()).dump() + ",\n";
  }
  out += "  \"vocab\": [";
  const auto vocab = tokenizer.vocab();
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    out += i == 0 ? "\n    \"" : ",\n    \"";
    out += base64_encode(vocab[i]);
    out += '"';
  }
  out += "\n  ],\n  \"merges\": [";
  const auto merges = tokenizer.merges();
  for (std::size_t i = 0; i < merges.size(); ++i) {
    out += i == 0 ? "\n    [" : ",\n    [";
    out += std::to_string(merges[i].left) + ", " + std::to_string(merges[i].right) + ", " +
           std::to_string(merges[i].result) + "]";
  }
  out += merges.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

Tokenizer parse_tokenizer(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("$: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("$: expected an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "version" && key != "scheme" && key != "pattern" && key != "vocab" &&
        key != "merges") {
      throw ParseError(key + ": unknown field");
    }
  }

  const json& version = require(doc, "version");
  if (!version.is_number_integer()) throw ParseError("version: expected an integer");
  if (version.get<std::int64_t>() != kTokenizerFileVersion) {
    throw UnsupportedVersionError("version: unsupported tokenizer file version " +
                                  version.dump());
  }

  const json& scheme = require(doc, "scheme");
  if (!scheme.is_string()) throw ParseError("scheme: expected a string");
  std::string pattern;
  if (const auto it = doc.find("pattern"); it != doc.end() && !it->is_null()) {
    if (!it->is_string()) throw ParseError("pattern: expected a string");
    pattern = it->get<std::string>();
  }
  PretokenizerSpec spec;
  try {
    spec = PretokenizerSpec::from_name(scheme.get<std::string>(), pattern);
  } catch (const ConfigError& e) {
    throw ParseError(std::string("scheme: ") + e.what());
  }

  const json& vocab_json = require(doc, "vocab");
  if (!vocab_json.is_array()) throw ParseError("vocab: expected an array");
  std::vector<std::string> vocab;
  vocab.reserve(vocab_json.size());
  for (std::size_t i = 0; i < vocab_json.size(); ++i) {
    const std::string path = "vocab[" + std::to_string(i) + "]";
    if (!vocab_json[i].is_string()) throw ParseError(path + ": expected a string");
    try {
      vocab.push_back(base64_decode(vocab_json[i].get_ref<const std::string&>()));
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what());
    }
  }

  const json& merges_json = require(doc, "merges");
  if (!merges_json.is_array()) throw ParseError("merges: expected an array");
  std::vector<Merge> merges;
  merges.reserve(merges_json.size());
  for (std::size_t i = 0; i < merges_json.size(); ++i) {
    const std::string path = "merges[" + std::to_string(i) + "]";
    const json& m = merges_json[i];
    if (!m.is_array() || m.size() != 3) {
      throw ParseError(path + ": expected [left, right, result]");
    }
    merges.push_back({parse_id(m[0], path + "[0]"), parse_id(m[1], path + "[1]"),
                      parse_id(m[2], path + "[2]")});
  }

  try {
    return Tokenizer(std::move(spec), std::move(vocab), std::move(merges));
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

void save_tokenizer(const Tokenizer& tokenizer, const std::filesystem::path& path) {
  write_file(path, serialize_tokenizer(tokenizer));
}

Tokenizer load_tokenizer(const std::filesystem::path& path) {
  try {
    return parse_tokenizer(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string serialize_embeddings(const EmbeddingMatrix& matrix) {
  if (matrix.rows() > std::numeric_limits<std::uint32_t>::max() ||
      matrix.cols() > std::numeric_limits<std::uint32_t>::max()) {
    throw ValidationError("embedding matrix too large for the EMB1 format");
  }
  std::string out(kEmbeddingMagic.begin(), kEmbeddingMagic.end());
  out.reserve(kEmbeddingHeader + 4 * matrix.values().size());
  put_u32(out, static_cast<std::uint32_t>(matrix.rows()));
  put_u32(out, static_cast<std::uint32_t>(matrix.cols()));
  for (const float f : matrix.values()) put_u32(out, std::bit_cast<std::uint32_t>(f));
  return out;
}

EmbeddingMatrix parse_embeddings(std::string_view bytes) {
  if (bytes.size() < kEmbeddingHeader) {
    throw ParseError("embedding file truncated: " + std::to_string(bytes.size()) +
                     " bytes, header needs 12");
  }
  if (std::memcmp(bytes.data(), kEmbeddingMagic.data(), kEmbeddingMagic.size()) != 0) {
    throw ParseError("embedding file: bad magic (expected EMB1)");
  }
  const std::uint64_t rows = get_u32(bytes, 4);
  const std::uint64_t cols = get_u32(bytes, 8);
  const std::uint64_t expected = kEmbeddingHeader + 4 * rows * cols;
  if (bytes.size() != expected) {
    throw ParseError("embedding file: size " + std::to_string(bytes.size()) +
                     " does not match " + std::to_string(rows) + "x" + std::to_string(cols) +
                     " (expected " + std::to_string(expected) + ")");
  }
  std::vector<float> values(rows * cols);
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = std::bit_cast<float>(get_u32(bytes, kEmbeddingHeader + 4 * i));
  }
  try {
    return EmbeddingMatrix(rows, cols, std::move(values));
  } catch (const ValidationError& e) {
    throw ParseError(std::string("embedding file: ") + e.what());
  }
}

void save_embeddings(const EmbeddingMatrix& matrix, const std::filesystem::path& path) {
  write_file(path, serialize_embeddings(matrix));
}

EmbeddingMatrix load_embeddings(const std::filesystem::path& path) {
  try {
    return parse_embeddings(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace toksmith
