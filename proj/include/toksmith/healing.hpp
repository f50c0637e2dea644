#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toksmith/tokenizer.hpp"

namespace toksmith {

// Next-token scorer: one finite score per vocab id, higher is more likely.
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual std::vector<double> score(std::span<const TokenId> context) const = 0;
};

class UniformScorer final : public Scorer {
 public:
  explicit UniformScorer(std::size_t vocab_size) : vocab_size_(vocab_size) {}
  std::vector<double> score(std::span<const TokenId> context) const override;

 private:
  std::size_t vocab_size_;
};

// Byte n-gram model with add-one smoothing. A token scores the summed log
// probability of its bytes following the decoded context, relative to a
// uniform byte model, so well-predicted longer tokens outrank their
// prefixes.
class NgramScorer final : public Scorer {
 public:
  NgramScorer(Tokenizer tokenizer, std::string_view training_text, int order = 3);
  std::vector<double> score(std::span<const TokenId> context) const override;

 private:
  double log_prob(std::string_view history, unsigned char next) const;

  Tokenizer tokenizer_;
  int order_;
  // History (up to order-1 bytes) -> counts of the following byte.
  std::unordered_map<std::string, std::vector<std::uint32_t>> counts_;
  std::unordered_map<std::string, std::uint64_t> totals_;
};

enum class HealStrategy { kNone, kSingleStep, kNStep };

std::string_view strategy_name(HealStrategy strategy);
// "none", "single", "nstep". Throws ConfigError.
HealStrategy parse_strategy(std::string_view name);

struct HealingResult {
  std::vector<TokenId> kept_ids;
  std::string removed_suffix;
  // Sorted by id.
  std::vector<TokenId> candidates;
  TokenId chosen = 0;
  HealStrategy strategy = HealStrategy::kNone;
  // Set when a healing strategy had no candidates and fell back to kNone.
  bool fell_back = false;
};

// Token healing against a fixed vocabulary. Builds a sorted index of the
// token byte strings once, then answers prefix-coverage queries.
class Healer {
 public:
  explicit Healer(Tokenizer tokenizer);

  // Ids whose byte string starts with `prefix`, sorted by id.
  std::vector<TokenId> tokens_with_prefix(std::string_view prefix) const;
  bool covered(std::string_view prefix) const;

  // kNone: keep the whole encoding; every token is a candidate.
  // kSingleStep: drop the last token; candidates must start with its bytes.
  // kNStep: keep dropping trailing tokens while some token still starts
  //   with the enlarged removed text, then constrain as in kSingleStep.
  // The choice is the highest-scoring candidate, smallest id on ties.
  // Throws ConfigError for an empty prompt, InterfaceError if the scorer
  // output does not match the vocab.
  HealingResult heal(std::string_view prompt, const Scorer& scorer,
                     HealStrategy strategy) const;

  const Tokenizer& tokenizer() const { return tokenizer_; }

 private:
  Tokenizer tokenizer_;
  std::vector<TokenId> sorted_;  // ids ordered by byte string
};

HealingResult heal(const Tokenizer& tokenizer, std::string_view prompt, const Scorer& scorer,
                   HealStrategy strategy);

std::string healing_result_json(const Tokenizer& tokenizer, const HealingResult& result);

}  // namespace toksmith
