#include "toksmith/healing.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "toksmith/error.hpp"
#include "toksmith/persistence.hpp"
#include "toksmith/utf8.hpp"

namespace toksmith {

std::vector<double> UniformScorer::score(std::span<const TokenId>) const {
  return std::vector<double>(vocab_size_, 0.0);
}

NgramScorer::NgramScorer(Tokenizer tokenizer, std::string_view training_text, int order)
    : tokenizer_(std::move(tokenizer)), order_(order) {
  if (order_ < 1) throw ConfigError("n-gram order must be at least 1");
  const auto history = static_cast<std::size_t>(order_ - 1);
  for (std::size_t i = 0; i < training_text.size(); ++i) {
    const std::size_t from = i >= history ? i - history : 0;
    std::string key(training_text.substr(from, i - from));
    auto& row = counts_[key];
    if (row.empty()) row.assign(256, 0);
    ++row[static_cast<unsigned char>(training_text[i])];
    ++totals_[key];
  }
}

double NgramScorer::log_prob(std::string_view history, unsigned char next) const {
  const std::string key(history);
  const auto it = counts_.find(key);
  const double count = it == counts_.end() ? 0.0 : it->second[next];
  const auto tot = totals_.find(key);
  const double total = tot == totals_.end() ? 0.0 : static_cast<double>(tot->second);
  return std::log((count + 1.0) / (total + 256.0) * 256.0);
}

std::vector<double> NgramScorer::score(std::span<const TokenId> context) const {
  const auto history = static_cast<std::size_t>(order_ - 1);
  std::string tail = tokenizer_.decode(context);
  if (tail.size() > history) tail.erase(0, tail.size() - history);
  std::vector<double> scores(tokenizer_.vocab_size());
  for (std::size_t id = 0; id < scores.size(); ++id) {
    std::string text = tail + tokenizer_.token_bytes(static_cast<TokenId>(id));
    double total = 0.0;
    for (std::size_t i = tail.size(); i < text.size(); ++i) {
      const std::size_t from = i >= history ? i - history : 0;
      total += log_prob(std::string_view(text).substr(from, i - from),
                        static_cast<unsigned char>(text[i]));
    }
    scores[id] = total;
  }
  return scores;
}

std::string_view strategy_name(HealStrategy strategy) {
  switch (strategy) {
    case HealStrategy::kNone: return "none";
    case HealStrategy::kSingleStep: return "single";
    case HealStrategy::kNStep: return "nstep";
  }
  return "unknown";
}

HealStrategy parse_strategy(std::string_view name) {
  if (name == "none") return HealStrategy::kNone;
  if (name == "single") return HealStrategy::kSingleStep;
  if (name == "nstep") return HealStrategy::kNStep;
  throw ConfigError("unknown healing strategy '" + std::string(name) + "'");
}

Healer::Healer(Tokenizer tokenizer) : tokenizer_(std::move(tokenizer)) {
  sorted_.resize(tokenizer_.vocab_size());
  for (std::size_t i = 0; i < sorted_.size(); ++i) sorted_[i] = static_cast<TokenId>(i);
  const auto vocab = tokenizer_.vocab();
  std::sort(sorted_.begin(), sorted_.end(),
            [&](TokenId a, TokenId b) { return vocab[a] < vocab[b]; });
}

std::vector<TokenId> Healer::tokens_with_prefix(std::string_view prefix) const {
  const auto vocab = tokenizer_.vocab();
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), prefix,
                             [&](TokenId id, std::string_view p) { return vocab[id] < p; });
  std::vector<TokenId> out;
  for (; it != sorted_.end() && vocab[*it].starts_with(prefix); ++it) out.push_back(*it);
  std::sort(out.begin(), out.end());
  return out;
}

bool Healer::covered(std::string_view prefix) const {
  const auto vocab = tokenizer_.vocab();
  const auto it = std::lower_bound(sorted_.begin(), sorted_.end(), prefix,
                                   [&](TokenId id, std::string_view p) { return vocab[id] < p; });
  return it != sorted_.end() && vocab[*it].starts_with(prefix);
}

HealingResult Healer::heal(std::string_view prompt, const Scorer& scorer,
                           HealStrategy strategy) const {
  if (prompt.empty()) throw ConfigError("healing needs a non-empty prompt");
  HealingResult result;
  result.strategy = strategy;
  std::vector<TokenId> ids = tokenizer_.encode(prompt);

  std::size_t keep = ids.size();
  if (strategy != HealStrategy::kNone) {
    keep = ids.size() - 1;
    result.removed_suffix = tokenizer_.token_bytes(ids.back());
    if (strategy == HealStrategy::kNStep) {
      while (keep > 0) {
        std::string enlarged = tokenizer_.token_bytes(ids[keep - 1]) + result.removed_suffix;
        if (!covered(enlarged)) break;
        result.removed_suffix = std::move(enlarged);
        --keep;
      }
    }
    result.candidates = tokens_with_prefix(result.removed_suffix);
    if (result.candidates.empty()) {
      result.strategy = HealStrategy::kNone;
      result.fell_back = true;
      result.removed_suffix.clear();
      keep = ids.size();
    }
  }
  result.kept_ids.assign(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(keep));
  if (result.strategy == HealStrategy::kNone) {
    result.candidates.resize(tokenizer_.vocab_size());
    for (std::size_t i = 0; i < result.candidates.size(); ++i) {
      result.candidates[i] = static_cast<TokenId>(i);
    }
  }

  const std::vector<double> scores = scorer.score(result.kept_ids);
  if (scores.size() != tokenizer_.vocab_size()) {
    throw InterfaceError("scorer returned " + std::to_string(scores.size()) +
                         " scores for a vocab of " + std::to_string(tokenizer_.vocab_size()));
  }
  bool first = true;
  double best = 0.0;
  for (const TokenId c : result.candidates) {
    if (!std::isfinite(scores[c])) {
      throw InterfaceError("scorer returned a non-finite score for token " + std::to_string(c));
    }
    if (first || scores[c] > best) {
      best = scores[c];
      result.chosen = c;
      first = false;
    }
  }
  return result;
}

HealingResult heal(const Tokenizer& tokenizer, std::string_view prompt, const Scorer& scorer,
                   HealStrategy strategy) {
  return Healer(tokenizer).heal(prompt, scorer, strategy);
}

std::string healing_result_json(const Tokenizer& tokenizer, const HealingResult& result) {
  using nlohmann::json;
  auto text_or_null = [](const std::string& bytes) -> json {
    return utf8::is_valid(bytes) ? json(bytes) : json(nullptr);
  };
  const std::string& chosen = tokenizer.token_bytes(result.chosen);
  json candidates = result.candidates;
  json doc = {
      {"strategy", std::string(strategy_name(result.strategy))},
      {"fell_back", result.fell_back},
      {"kept_ids", result.kept_ids},
      {"kept_text", text_or_null(tokenizer.decode(result.kept_ids))},
      {"removed_suffix", text_or_null(result.removed_suffix)},
      {"removed_suffix_base64", base64_encode(result.removed_suffix)},
      {"candidate_count", result.candidates.size()},
      {"candidates", result.strategy == HealStrategy::kNone ? json("all") : candidates},
      {"chosen", result.chosen},
      {"chosen_text", text_or_null(chosen)},
      {"chosen_base64", base64_encode(chosen)},
  };
  return doc.dump(2) + "\n";
}

}  // namespace toksmith
