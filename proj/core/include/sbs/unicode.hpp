#pragma once

#include <string>
#include <string_view>

// Minimal UTF-8 and character-class helpers for news text. Letters are the
// Latin, Greek and Cyrillic blocks; everything else outside ASCII is treated
// as a separator.
namespace sbs::unicode {

// Invalid sequences decode to U+FFFD.
std::u32string decode(std::string_view utf8);
std::string encode(std::u32string_view text);
void append(std::string& out, char32_t cp);

char32_t to_lower(char32_t cp);
std::string to_lower(std::string_view utf8);

bool is_letter(char32_t cp);
// Letters, decimal digits and '_' (the joiner used in canonical tokens).
bool is_token_char(char32_t cp);
bool is_space(char32_t cp);

}  // namespace sbs::unicode
