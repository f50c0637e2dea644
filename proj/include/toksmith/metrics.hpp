#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toksmith/corpus.hpp"
#include "toksmith/tokenizer.hpp"

namespace toksmith {

inline constexpr double kDefaultRenyiAlpha = 2.5;

// Normalized sequence length: total tokens under the candidate divided by
// total tokens under the baseline (ratio of sums over documents).
double nsl_from_lengths(std::span<const std::size_t> candidate,
                        std::span<const std::size_t> baseline);
double nsl(const Tokenizer& candidate, const Tokenizer& baseline,
           std::span<const std::string> docs);

// Total UTF-8 bytes over total tokens.
double bytes_per_token(const Tokenizer& tokenizer, std::span<const std::string> docs);

// Rényi entropy of order alpha of the unigram token distribution, divided
// by log(vocab_size). counts[i] is the frequency of token i; ids beyond
// counts.size() have frequency zero.
double renyi_efficiency(std::span<const std::uint64_t> counts, std::size_t vocab_size,
                        double alpha = kDefaultRenyiAlpha);
double renyi_efficiency(const Tokenizer& tokenizer, std::span<const std::string> docs,
                        double alpha = kDefaultRenyiAlpha);

struct SubsetMetrics {
  double nsl = 0.0;
  double bytes_per_token = 0.0;
  double renyi = 0.0;
  std::size_t token_count = 0;
  std::size_t byte_count = 0;
};

struct MetricTriple {
  double nsl = 0.0;
  double bytes_per_token = 0.0;
  double renyi = 0.0;
};

struct CompressionReport {
  std::string name;
  std::map<std::pair<std::string, std::string>, SubsetMetrics> per_subset;
  // Unweighted mean over the category's subsets.
  std::map<std::string, MetricTriple> per_category;
  // Unweighted mean over categories.
  MetricTriple overall;
};

struct NamedTokenizer {
  std::string name;
  Tokenizer tokenizer;
};

// Scores every tokenizer on the holdout documents of every subset.
// Throws ValidationError if a subset has no holdout documents.
std::vector<CompressionReport> evaluate(std::span<const NamedTokenizer> tokenizers,
                                        const Tokenizer& baseline,
                                        const CorpusManifest& manifest,
                                        unsigned threads = 1,
                                        double alpha = kDefaultRenyiAlpha);

// Builds per-category and overall averages from per_subset.
void summarize(CompressionReport& report);

std::string report_json(std::span<const CompressionReport> reports);
// Aligned human-readable table: one row per tokenizer, NSL and bytes per
// token for the average and each category, then average Rényi.
std::string report_table(std::span<const CompressionReport> reports);

}  // namespace toksmith
