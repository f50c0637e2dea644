#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "toksmith/tokenizer.hpp"
#include "toksmith/utf8.hpp"

namespace toksmith::testing {

// Random valid UTF-8 biased towards the characters pre-tokenizers care
// about: letters, digits, punctuation, assorted whitespace, multi-byte
// scripts and emoji.
inline std::string random_utf8(std::mt19937_64& rng, std::size_t max_scalars = 40) {
  static const std::vector<char32_t> kSpecial = {
      U' ', U' ', U'\t', U'\n', U'\r', U'\v', U'\f', 0x85, 0xA0, 0x3000,
      U'.', U',', U'(', U')', U'\'', U'"', U'_', U'-', U'!', U'#', U'{', U'}',
      0xE9, 0xFC, 0x301, 0x4E2D, 0x6587, 0x3042, 0x0416, 0x03A9, 0x1F642, 0x1F680,
      0x0660, 0x00BD, 0xFFFD, 0x10FFFF, 0x0};
  std::uniform_int_distribution<std::size_t> len_dist(0, max_scalars);
  std::uniform_int_distribution<int> kind(0, 9);
  std::string out;
  const std::size_t n = len_dist(rng);
  for (std::size_t i = 0; i < n; ++i) {
    char32_t cp = 0;
    switch (kind(rng)) {
      case 0: case 1: case 2:
        cp = U'a' + static_cast<char32_t>(rng() % 26);
        break;
      case 3:
        cp = U'A' + static_cast<char32_t>(rng() % 26);
        break;
      case 4:
        cp = U'0' + static_cast<char32_t>(rng() % 10);
        break;
      case 5: case 6:
        cp = kSpecial[rng() % kSpecial.size()];
        break;
      case 7:
        cp = 0x20 + static_cast<char32_t>(rng() % 0x5F);
        break;
      case 8:
        cp = static_cast<char32_t>(rng() % 0x20);
        break;
      default: {
        // Any scalar value, skipping surrogates.
        cp = static_cast<char32_t>(rng() % 0x110000);
        if (cp >= 0xD800 && cp <= 0xDFFF) cp = 0x4E00;
      }
    }
    utf8::append(out, cp);
  }
  return out;
}

// Reference encoder for raw bytes (no pre-tokenization): repeatedly merge the lowest-ranked adjacent pair,
// leftmost first.
inline std::vector<TokenId> naive_encode(const Tokenizer& t, std::string_view chunk) {
  std::map<std::pair<TokenId, TokenId>, std::size_t> rank;
  for (std::size_t r = 0; r < t.merges().size(); ++r) {
    rank[{t.merges()[r].left, t.merges()[r].right}] = r;
  }
  std::vector<TokenId> ids;
  for (char c : chunk) ids.push_back(static_cast<unsigned char>(c));
  while (true) {
    std::size_t best_rank = SIZE_MAX;
    std::size_t best_pos = 0;
    for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
      const auto it = rank.find({ids[i], ids[i + 1]});
      if (it != rank.end() && it->second < best_rank) best_rank = it->second, best_pos = i;
    }
    if (best_rank == SIZE_MAX) break;
    ids[best_pos] = t.merges()[best_rank].result;
    ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(best_pos) + 1);
  }
  return ids;
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("toksmith_test_" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path write(const std::string& rel, const std::string& contents) const {
    const auto p = path_ / rel;
    std::filesystem::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << contents;
    return p;
  }

 private:
  std::filesystem::path path_;
};

}  // namespace toksmith::testing
