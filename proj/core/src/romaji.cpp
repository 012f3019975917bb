#include "jtemporal/romaji.hpp"

#include <vector>

namespace jtemporal::romaji {

namespace {

// Decodes one UTF-8 code point starting at text[pos]; advances pos.
std::optional<char32_t> decode(std::string_view text, std::size_t& pos) {
  const auto b0 = static_cast<unsigned char>(text[pos]);
  if (b0 < 0x80) {
    ++pos;
    return b0;
  }
  int extra = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    extra = 1;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    extra = 2;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    extra = 3;
    cp = b0 & 0x07;
  } else {
    return std::nullopt;
  }
  if (pos + extra >= text.size()) return std::nullopt;
  for (int i = 1; i <= extra; ++i) {
    const auto b = static_cast<unsigned char>(text[pos + i]);
    if ((b & 0xC0) != 0x80) return std::nullopt;
    cp = (cp << 6) | (b & 0x3F);
  }
  pos += static_cast<std::size_t>(extra) + 1;
  return cp;
}

void encode(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

struct VowelForm {
  char32_t macron_lower;
  char32_t macron_upper;
  char32_t circ_lower;
  char32_t circ_upper;
  char plain;
};

constexpr VowelForm kVowels[] = {
    {0x0101, 0x0100, 0x00E2, 0x00C2, 'a'},
    {0x0113, 0x0112, 0x00EA, 0x00CA, 'e'},
    {0x012B, 0x012A, 0x00EE, 0x00CE, 'i'},
    {0x014D, 0x014C, 0x00F4, 0x00D4, 'o'},
    {0x016B, 0x016A, 0x00FB, 0x00DB, 'u'},
};

const VowelForm* long_vowel(char32_t c) {
  for (const auto& v : kVowels) {
    if (c == v.macron_lower || c == v.macron_upper || c == v.circ_lower || c == v.circ_upper)
      return &v;
  }
  return nullptr;
}

}  // namespace

bool is_word_char(char32_t c) {
  if (c >= 'a' && c <= 'z') return true;
  if (c >= 'A' && c <= 'Z') return true;
  if (c >= '0' && c <= '9') return true;
  if (c == '\'') return true;
  return long_vowel(c) != nullptr;
}

std::optional<std::string> canonicalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto cp = decode(text, pos);
    if (!cp) return std::nullopt;
    if (*cp == '-' || *cp == ' ' || *cp == '\t') {
      out.push_back(static_cast<char>(*cp));
      continue;
    }
    if (!is_word_char(*cp)) return std::nullopt;
    if (const auto* v = long_vowel(*cp)) {
      encode(v->macron_lower, out);
    } else if (*cp >= 'A' && *cp <= 'Z') {
      out.push_back(static_cast<char>(*cp - 'A' + 'a'));
    } else {
      out.push_back(static_cast<char>(*cp));
    }
  }
  return out;
}

std::string fold(std::string_view text) {
  std::string plain;
  plain.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto cp = decode(text, pos);
    if (!cp) {
      ++pos;
      continue;
    }
    if (*cp == '\'') continue;
    if (const auto* v = long_vowel(*cp)) {
      plain.push_back(v->plain);
    } else if (*cp < 0x80) {
      char c = static_cast<char>(*cp);
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      plain.push_back(c);
    }
  }
  std::string out;
  out.reserve(plain.size());
  for (std::size_t i = 0; i < plain.size(); ++i) {
    const char c = plain[i];
    if (!out.empty()) {
      const char prev = out.back();
      const bool doubled = (prev == c && (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'));
      if (doubled || (prev == 'o' && c == 'u')) continue;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace jtemporal::romaji
