#include "toksmith/pretokenize.hpp"

#include <unicode/regex.h>
#include <unicode/utext.h>

#include <memory>
#include <string>

#include "toksmith/error.hpp"
#include "toksmith/utf8.hpp"

namespace toksmith {
namespace {

// \s and \S spelled as White_Space so vertical tab and NEL count as
// whitespace, as in the reference engines these patterns come from.
#define TS_WS "\\p{White_Space}"
#define TS_NWS "\\P{White_Space}"

// contractions | optional space + letters | optional space + digits |
// optional space + punctuation run | whitespace not before a non-space |
// whitespace run
const std::string kGpt2Pattern =
    "'s|'t|'re|'ve|'m|'ll|'d"
    "| ?\\p{L}+"
    "| ?\\p{N}+"
    "| ?[^" TS_WS "\\p{L}\\p{N}]+"
    "|" TS_WS "+(?!" TS_NWS ")"
    "|" TS_WS "+";

// Case-insensitive contractions, one optional non-newline non-alphanumeric
// character before letters, digit runs capped at three, punctuation runs
// with trailing newlines, whitespace grouped up to a newline.
const std::string kGpt4Pattern =
    "(?i:'s|'t|'re|'ve|'m|'ll|'d)"
    "|[^\\r\\n\\p{L}\\p{N}]?\\p{L}+"
    "|\\p{N}{1,3}"
    "| ?[^" TS_WS "\\p{L}\\p{N}]+[\\r\\n]*"
    "|" TS_WS "*[\\r\\n]+"
    "|" TS_WS "+(?!" TS_NWS ")"
    "|" TS_WS "+";

// GPT-4 without contractions; letter runs take at most a plain space in
// front, so "\tfoo" and ".append" split before the letters.
const std::string kPunctPattern =
    " ?\\p{L}+"
    "|\\p{N}{1,3}"
    "| ?[^" TS_WS "\\p{L}\\p{N}]+[\\r\\n]*"
    "|" TS_WS "*[\\r\\n]+"
    "|" TS_WS "+(?!" TS_NWS ")"
    "|" TS_WS "+";

#undef TS_WS
#undef TS_NWS

const std::string kEmpty;

struct UTextCloser {
  void operator()(UText* ut) const { utext_close(ut); }
};

std::unique_ptr<icu::RegexPattern> compile(const std::string& source) {
  UErrorCode status = U_ZERO_ERROR;
  UParseError parse_error{};
  const icu::UnicodeString pattern = icu::UnicodeString::fromUTF8(source);
  std::unique_ptr<icu::RegexPattern> compiled(
      icu::RegexPattern::compile(pattern, 0, parse_error, status));
  if (U_FAILURE(status) || !compiled) {
    throw ConfigError("invalid pre-tokenizer pattern '" + source + "': " +
                      u_errorName(status) + " at offset " +
                      std::to_string(parse_error.offset));
  }
  return compiled;
}

}  // namespace

struct PretokenizerSpec::Compiled {
  std::unique_ptr<icu::RegexPattern> pattern;
};

std::string_view scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::kIdentity: return "identity";
    case Scheme::kGpt2: return "gpt2";
    case Scheme::kGpt4: return "gpt4";
    case Scheme::kPunct: return "punct";
    case Scheme::kCustom: return "custom";
  }
  return "unknown";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "identity") return Scheme::kIdentity;
  if (name == "gpt2") return Scheme::kGpt2;
  if (name == "gpt4") return Scheme::kGpt4;
  if (name == "punct") return Scheme::kPunct;
  if (name == "custom") return Scheme::kCustom;
  throw ConfigError("unknown pre-tokenizer scheme '" + std::string(name) + "'");
}

const std::string& builtin_pattern(Scheme scheme) {
  switch (scheme) {
    case Scheme::kGpt2: return kGpt2Pattern;
    case Scheme::kGpt4: return kGpt4Pattern;
    case Scheme::kPunct: return kPunctPattern;
    default: return kEmpty;
  }
}

PretokenizerSpec::PretokenizerSpec() : scheme_(Scheme::kIdentity) {}

PretokenizerSpec::PretokenizerSpec(Scheme scheme, std::string pattern)
    : scheme_(scheme) {
  switch (scheme) {
    case Scheme::kIdentity:
      if (!pattern.empty()) {
        throw ConfigError("identity scheme does not take a pattern");
      }
      return;
    case Scheme::kCustom:
      if (pattern.empty()) {
        throw ConfigError("custom scheme requires a pattern");
      }
      pattern_ = std::move(pattern);
      break;
    default:
      if (!pattern.empty()) {
        throw ConfigError("built-in scheme '" + std::string(scheme_name(scheme)) +
                          "' does not take a pattern");
      }
      pattern_ = builtin_pattern(scheme);
      break;
  }
  regex_ = std::make_shared<const Compiled>(Compiled{compile(pattern_)});
}

PretokenizerSpec PretokenizerSpec::from_name(std::string_view name,
                                             std::string pattern) {
  return PretokenizerSpec(parse_scheme(name), std::move(pattern));
}

std::vector<std::string_view> PretokenizerSpec::split(std::string_view text) const {
  std::vector<std::string_view> chunks;
  if (text.empty()) return chunks;
  if (scheme_ == Scheme::kIdentity) {
    chunks.push_back(text);
    return chunks;
  }

  UErrorCode status = U_ZERO_ERROR;
  std::unique_ptr<UText, UTextCloser> input(
      utext_openUTF8(nullptr, text.data(), static_cast<int64_t>(text.size()), &status));
  std::unique_ptr<icu::RegexMatcher> matcher(regex_->pattern->matcher(status));
  if (U_FAILURE(status)) {
    throw Error(std::string("regex matcher setup failed: ") + u_errorName(status));
  }
  matcher->reset(input.get());

  std::size_t pos = 0;
  while (matcher->find(status) && U_SUCCESS(status)) {
    const auto start = static_cast<std::size_t>(matcher->start64(status));
    const auto end = static_cast<std::size_t>(matcher->end64(status));
    if (end <= start) continue;
    if (start > pos) chunks.push_back(text.substr(pos, start - pos));
    chunks.push_back(text.substr(start, end - start));
    pos = end;
  }
  if (U_FAILURE(status)) {
    throw Error(std::string("regex matching failed: ") + u_errorName(status));
  }
  if (pos < text.size()) chunks.push_back(text.substr(pos));
  return chunks;
}

bool PretokenizerSpec::validate_token(std::string_view token) const {
  if (scheme_ == Scheme::kIdentity) return true;
  if (!utf8::is_valid(token)) return true;
  return split(token).size() == 1;
}

}  // namespace toksmith
