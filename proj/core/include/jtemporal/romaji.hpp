#pragma once

#include <optional>
#include <string>
#include <string_view>

// Helpers for Hepburn romanization as it shows up in hand-typed input:
// macron vowels (kyō), circumflex vowels (kyô), doubled vowels (kyou,
// kyoo) and plain ASCII (kyo).
namespace jtemporal::romaji {

/// Lowercases and rewrites circumflex vowels as macron vowels. Returns
/// nullopt if `text` contains a byte sequence that is not valid UTF-8 or
/// a code point outside the romanization alphabet.
std::optional<std::string> canonicalize(std::string_view text);

/// Spelling-insensitive lookup key: macrons and circumflexes dropped,
/// long-vowel spellings (ou, oo, uu, aa, ee, ii) collapsed, apostrophes
/// removed. Assumes `text` already passed canonicalize().
std::string fold(std::string_view text);

/// True for the code points canonicalize() accepts, excluding separators.
bool is_word_char(char32_t c);

}  // namespace jtemporal::romaji
