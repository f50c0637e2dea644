#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "toksmith/embedding.hpp"
#include "toksmith/tokenizer.hpp"

namespace toksmith {

inline constexpr int kTokenizerFileVersion = 1;

// Tokenizer file: a JSON document with a fixed layout
//
//   {
//     "version": 1,
//     "scheme": "gpt4",
//     "pattern": "...",          (custom scheme only)
//     "vocab": [
//       "AA==",                  (base64 token bytes; index = id)
//       ...
//     ],
//     "merges": [
//       [97, 98, 256],           (left, right, result)
//       ...
//     ]
//   }
//
// Saving is deterministic, so load + save reproduces the file bytes.
std::string serialize_tokenizer(const Tokenizer& tokenizer);
// Throws ParseError (message starts with the offending field path) or
// UnsupportedVersionError.
Tokenizer parse_tokenizer(std::string_view text);

void save_tokenizer(const Tokenizer& tokenizer, const std::filesystem::path& path);
Tokenizer load_tokenizer(const std::filesystem::path& path);

// Embedding file: "EMB1", rows (u32 LE), cols (u32 LE), then rows*cols
// float32 LE values, row-major. Size is exactly 12 + 4*rows*cols.
std::string serialize_embeddings(const EmbeddingMatrix& matrix);
EmbeddingMatrix parse_embeddings(std::string_view bytes);

void save_embeddings(const EmbeddingMatrix& matrix, const std::filesystem::path& path);
EmbeddingMatrix load_embeddings(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

std::string base64_encode(std::string_view bytes);
// Throws ParseError on malformed input.
std::string base64_decode(std::string_view text);

}  // namespace toksmith
