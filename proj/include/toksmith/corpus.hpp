#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toksmith/trainer.hpp"

namespace toksmith {

struct Subset {
  std::string name;
  // Sorted lexicographically. The last `holdout_count` files are held out.
  std::vector<std::filesystem::path> files;
  std::size_t holdout_count = 0;

  std::span<const std::filesystem::path> train_files() const {
    return std::span(files).first(files.size() - holdout_count);
  }
  std::span<const std::filesystem::path> holdout_files() const {
    return std::span(files).last(holdout_count);
  }
};

struct Category {
  std::string name;
  std::vector<Subset> subsets;
};

// Manifest file (JSON):
//
//   {
//     "categories": {
//       "code": {
//         "python": {"files": ["code/python/*.py"], "holdout": 8},
//         "cpp":    {"files": ["code/cpp/a.cpp", "code/cpp/b.cpp"], "holdout": 1}
//       },
//       "english": { ... }
//     }
//   }
//
// File entries are paths relative to the manifest's directory. Wildcards
// (*, ?, [..]) are allowed in the final path component only.
class CorpusManifest {
 public:
  CorpusManifest() = default;
  // Validates: unique names, holdout_count <= file count, files exist.
  explicit CorpusManifest(std::vector<Category> categories);

  // Throws ParseError for malformed JSON/schema, ValidationError otherwise.
  static CorpusManifest load(const std::filesystem::path& path);

  const std::vector<Category>& categories() const { return categories_; }
  const Category* find(std::string_view name) const;

 private:
  std::vector<Category> categories_;
};

std::vector<std::string> read_documents(std::span<const std::filesystem::path> files);

// Category weights for a training mix, fractions summing to 1.
struct MixSpec {
  std::map<std::string, double> weights;
  std::size_t char_budget = 0;

  // Throws ConfigError.
  void validate() const;
};

// Parses "code=0.7,english=0.3". Throws ConfigError.
std::map<std::string, double> parse_weights(std::string_view text);

// Streams whole training documents, interleaved so each category's running
// character share tracks its weight. Each category emits exactly
// round(weight * char_budget) characters; the document crossing that limit
// is truncated. Documents within a category are visited in a seeded
// shuffled order, cycling if the budget exceeds the training split.
// Holdout files are never read.
class MixSampler {
 public:
  // Throws ConfigError for invalid mixes or unknown categories,
  // ValidationError for empty training splits.
  MixSampler(const CorpusManifest& manifest, const MixSpec& mix, std::uint64_t seed);

  std::optional<std::string> next();
  DocumentSource source();

  // Characters (Unicode scalars) emitted so far per category.
  const std::map<std::string, std::size_t>& emitted() const { return emitted_; }

 private:
  struct Stream {
    std::string category;
    std::size_t target = 0;
    std::vector<std::filesystem::path> files;
    std::size_t cursor = 0;
    std::size_t empty_run = 0;
  };
  std::vector<Stream> streams_;
  std::map<std::string, std::size_t> emitted_;
};

}  // namespace toksmith
