#pragma once

#include <cstddef>
#include <string>
#include <string_view>

// Thin UTF-8 / code point helpers. Classification is backed by ICU with an
// ASCII fast path. Invalid byte sequences decode to U+FFFD with length 1, so
// callers can always make progress through arbitrary bytes.
namespace textmetrics::unicode {

inline constexpr char32_t kReplacement = 0xFFFD;

struct Decoded {
  char32_t cp;
  std::size_t length;  // bytes consumed, >= 1
};

Decoded decode(std::string_view s, std::size_t pos);
void append_utf8(std::string& out, char32_t cp);
bool is_valid_utf8(std::string_view s);

bool is_alnum(char32_t cp);
bool is_alpha(char32_t cp);
bool is_lower(char32_t cp);
bool is_space(char32_t cp);
bool is_mark(char32_t cp);
char32_t to_lower(char32_t cp);

/// Simple (one-to-one) lowercase mapping per code point.
std::string lower(std::string_view s);

/// Number of code points.
std::size_t length(std::string_view s);

bool contains_alnum(std::string_view s);
bool contains_alpha(std::string_view s);
std::size_t count_alnum(std::string_view s);

}  // namespace textmetrics::unicode
