#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "toksmith/pretokenize.hpp"
#include "toksmith/tokenizer.hpp"

namespace toksmith {

// Pull-style document stream; returns nullopt when exhausted.
using DocumentSource = std::function<std::optional<std::string>()>;

DocumentSource documents_from(std::span<const std::string> docs);

struct TrainOptions {
  std::size_t target_vocab = 32000;
  // Stop consuming the stream after this many Unicode scalar values; the
  // document crossing the limit is truncated.
  std::optional<std::size_t> char_budget;
  // Threads used for pre-tokenization and chunk counting. The result does
  // not depend on this value.
  unsigned threads = 1;
};

// Learns merges by repeatedly merging the most frequent adjacent pair
// inside pre-tokenized chunks. Ties go to the lexicographically smaller
// (left bytes, right bytes). A pair whose concatenation already exists in
// the vocab is never merged, so the result always has
// vocab_size == 256 + merges.size() and ids follow merge order.
//
// Throws ConfigError for target_vocab < 256 and TrainingError for an
// empty corpus.
Tokenizer train(const PretokenizerSpec& spec, const DocumentSource& corpus,
                const TrainOptions& options);

inline Tokenizer train(const PretokenizerSpec& spec, std::span<const std::string> docs,
                       const TrainOptions& options) {
  return train(spec, documents_from(docs), options);
}

}  // namespace toksmith
