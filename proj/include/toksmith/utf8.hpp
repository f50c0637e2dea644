#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace toksmith::utf8 {

// Strict UTF-8 validation (rejects overlongs, surrogates, > U+10FFFF).
bool is_valid(std::string_view bytes);

// Number of Unicode scalar values. Invalid bytes count as one each.
std::size_t count_scalars(std::string_view bytes);

// Byte length of the longest prefix holding at most `max_scalars` scalars.
std::size_t prefix_bytes(std::string_view bytes, std::size_t max_scalars);

void append(std::string& out, char32_t cp);

}  // namespace toksmith::utf8
