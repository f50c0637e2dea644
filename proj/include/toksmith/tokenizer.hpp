#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "toksmith/pretokenize.hpp"

namespace toksmith {

using TokenId = std::uint32_t;

inline constexpr std::size_t kByteVocabSize = 256;

struct Merge {
  TokenId left;
  TokenId right;
  TokenId result;

  friend bool operator==(const Merge&, const Merge&) = default;
};

// BPE-dropout: every candidate merge is skipped with probability `p`.
// Randomness is derived from `seed` and the chunk index, so a given
// (text, policy) pair always yields the same ids.
struct DropoutPolicy {
  double p = 0.0;
  std::uint64_t seed = 0;
};

// Byte-level BPE tokenizer: ids 0..255 are the single bytes, every other
// id is a byte string. Merges are applied in list order (lower index =
// higher priority). Tokens added by vocabulary extension may have no
// merge producing them.
//
// Immutable; copies share storage. Safe for concurrent encode/decode.
class Tokenizer {
 public:
  // Pure byte vocabulary, no merges.
  explicit Tokenizer(PretokenizerSpec spec = {});

  // Validates the structure and throws ValidationError on:
  // vocab[i] != byte i for i < 256, duplicate byte strings, ids out of
  // range, merge outputs that are not the concatenation of their operands,
  // duplicate merge pairs, or tokens produced by two merges.
  Tokenizer(PretokenizerSpec spec, std::vector<std::string> vocab,
            std::vector<Merge> merges);

  const PretokenizerSpec& spec() const { return data_->spec; }
  std::size_t vocab_size() const { return data_->vocab.size(); }
  std::span<const std::string> vocab() const { return data_->vocab; }
  std::span<const Merge> merges() const { return data_->merges; }

  // Throws DecodeError if out of range.
  const std::string& token_bytes(TokenId id) const;
  std::optional<TokenId> find(std::string_view bytes) const;

  std::vector<TokenId> encode(std::string_view text,
                              const std::optional<DropoutPolicy>& dropout = {}) const;
  // Appends to `out`; returns the number of ids appended.
  std::size_t encode_into(std::string_view text, std::vector<TokenId>& out,
                          const std::optional<DropoutPolicy>& dropout = {}) const;
  // Token count only.
  std::size_t count_tokens(std::string_view text) const;

  // Applies the merges to raw bytes, bypassing pre-tokenization.
  std::vector<TokenId> encode_bytes(std::string_view bytes) const;

  // Throws DecodeError naming the position of the first out-of-range id.
  std::string decode(std::span<const TokenId> ids) const;

  // A tokenizer keeping the first `n_merges` merges. Only meaningful for
  // trained tokenizers, where vocab ids follow merge order.
  Tokenizer truncated(std::size_t n_merges) const;

 private:
  struct Data {
    PretokenizerSpec spec;
    std::vector<std::string> vocab;
    std::vector<Merge> merges;
    std::unordered_map<std::string_view, TokenId> index;  // views into vocab
    std::unordered_map<std::uint64_t, std::uint32_t> ranks;  // pair -> merge index
  };

  void encode_chunk(std::string_view chunk, std::vector<TokenId>& out,
                    const DropoutPolicy* dropout, std::uint64_t chunk_index) const;

  std::shared_ptr<const Data> data_;
};

inline std::uint64_t pair_key(TokenId left, TokenId right) {
  return (static_cast<std::uint64_t>(left) << 32) | right;
}

}  // namespace toksmith
