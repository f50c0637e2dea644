#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace toksmith {

enum class Scheme { kIdentity, kGpt2, kGpt4, kPunct, kCustom };

// Lowercase serialized names: "identity", "gpt2", "gpt4", "punct", "custom".
std::string_view scheme_name(Scheme scheme);
// Throws ConfigError for unknown names.
Scheme parse_scheme(std::string_view name);

// Regex-driven segmentation of UTF-8 text into chunks that BPE merges may
// not cross. Splitting never normalizes: the chunks always concatenate
// back to the input byte-for-byte.
//
// Matching runs on Unicode scalar values (ICU regex over a UTF-8 UText);
// chunk boundaries are reported as byte offsets into the input. Bytes a
// custom pattern fails to match are emitted as their own chunk.
//
// Immutable and safe to share between threads.
class PretokenizerSpec {
 public:
  // Identity scheme.
  PretokenizerSpec();
  // Built-in schemes take no pattern; kCustom requires one. Invalid
  // patterns throw ConfigError here, never from split().
  explicit PretokenizerSpec(Scheme scheme, std::string pattern = {});

  static PretokenizerSpec from_name(std::string_view name,
                                    std::string pattern = {});

  Scheme scheme() const { return scheme_; }
  std::string_view name() const { return scheme_name(scheme_); }
  // The regex source actually used (empty for identity).
  const std::string& pattern() const { return pattern_; }

  // Views into `text`, in order. Empty input yields no chunks.
  std::vector<std::string_view> split(std::string_view text) const;

  // True iff `token` would survive pre-tokenization as a single chunk.
  // Byte strings that are not valid UTF-8 are accepted unconditionally.
  bool validate_token(std::string_view token) const;

  friend bool operator==(const PretokenizerSpec& a, const PretokenizerSpec& b) {
    return a.scheme_ == b.scheme_ && a.pattern_ == b.pattern_;
  }

 private:
  Scheme scheme_;
  std::string pattern_;
  struct Compiled;
  std::shared_ptr<const Compiled> regex_;
};

// Canonical regex sources of the built-in schemes.
const std::string& builtin_pattern(Scheme scheme);

}  // namespace toksmith
