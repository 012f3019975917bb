#include "jtemporal/parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "jtemporal/error.hpp"
#include "jtemporal/romaji.hpp"

namespace jtemporal {

namespace {

struct Spelling {
  std::string_view canonical;
  std::string_view folded;
};

constexpr std::array<Spelling, 7> kCounters{{
    {"nen", "nen"},
    {"gatsu", "gatsu"},
    {"nichi", "nichi"},
    {"ji", "ji"},
    {"fun", "fun"},
    {"fun", "pun"},
    {"kan", "kan"},
}};

constexpr std::array<Spelling, 8> kParticles{{
    {"ni", "ni"},
    {"de", "de"},
    {"no", "no"},
    {"wa", "wa"},
    {"kara", "kara"},
    {"made", "made"},
    {"mae", "mae"},
    {"chū", "chu"},
}};

template <std::size_t N>
std::optional<std::string_view> lookup(const std::array<Spelling, N>& table, std::string_view morpheme) {
  const auto folded = romaji::fold(morpheme);
  for (const auto& s : table) {
    if (s.folded == folded) return s.canonical;
  }
  return std::nullopt;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::optional<Counter> to_counter(std::string_view text) {
  if (text == "nen") return Counter::Nen;
  if (text == "gatsu") return Counter::Gatsu;
  if (text == "nichi") return Counter::Nichi;
  if (text == "ji") return Counter::Ji;
  if (text == "fun") return Counter::Fun;
  return std::nullopt;
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedCompound, what);
}

int numeral_value(const Token& token) {
  if (token.text.size() > 9) malformed("numeral too long: " + token.text);
  return std::stoi(token.text);
}

Head parse_numeric_unit(const std::vector<Token>& unit) {
  std::vector<NumeralCompound> parts;
  std::optional<RangeHead> range;
  std::size_t i = 0;
  while (i < unit.size()) {
    const Token& t = unit[i];
    if (t.kind == TokenKind::Counter) {
      malformed("counter '" + t.text + "' without a numeral");
    }
    if (t.kind != TokenKind::Numeral) malformed("unexpected '" + t.text + "' in a numeral compound");
    const int value = numeral_value(t);
    ++i;
    std::optional<int> range_end;
    if (i < unit.size() && unit[i].kind == TokenKind::Numeral) {
      range_end = numeral_value(unit[i]);
      ++i;
    }
    if (i >= unit.size() || unit[i].kind != TokenKind::Counter || unit[i].text == "kan") {
      malformed("numeral " + t.text + " without a counter");
    }
    const Counter counter = *to_counter(unit[i].text);
    ++i;
    bool duration = false;
    if (i < unit.size() && unit[i].kind == TokenKind::Counter && unit[i].text == "kan") {
      duration = true;
      ++i;
    }
    if (range_end) {
      if (duration || !parts.empty() || range || i != unit.size() || *range_end <= value) {
        malformed("a range must be a single increasing pair such as 12-13-nichi");
      }
      range = RangeHead{value, *range_end, counter};
      continue;
    }
    if (range) malformed("a range cannot be fused with other units");
    if (!parts.empty()) {
      if (duration || parts.back().duration) malformed("a duration cannot be part of a fused date");
      if (static_cast<int>(counter) <= static_cast<int>(parts.back().counter)) {
        malformed("fused date units must run from year down to minute");
      }
    }
    parts.push_back({value, counter, duration});
  }
  if (range) return *range;
  return CompoundHead{std::move(parts)};
}

TemporalPhrase parse_unit(const std::vector<Token>& unit, const Lexicon& lexicon, Domain domain) {
  for (std::size_t i = 1; i < unit.size(); ++i) {
    if (!unit[i].attached) {
      malformed("adjacent nouns must be joined by -no: '" + unit[i - 1].text + " " + unit[i].text + "'");
    }
  }
  TemporalPhrase phrase;
  if (unit.front().kind != TokenKind::Lemma) {
    phrase.head = parse_numeric_unit(unit);
    return phrase;
  }
  std::string surface;
  std::size_t i = 0;
  for (; i < unit.size() && unit[i].kind == TokenKind::Lemma; ++i) {
    if (!surface.empty()) surface += '-';
    surface += unit[i].text;
  }
  const LexEntry& entry = lexicon.at(surface, domain);
  if (entry.is_era()) {
    throw Error(ErrorCode::EraYear, "era years are not supported (" + surface + "); write the Western year");
  }
  if (i < unit.size()) {
    malformed("unexpected '" + unit[i].text + "' after '" + surface + "'");
  }
  phrase.head = LexicalHead{entry};
  return phrase;
}

bool is_ambiguous_position(const TemporalPhrase& phrase) {
  const auto* compound = std::get_if<CompoundHead>(&phrase.head);
  if (!compound || compound->parts.size() != 1) return false;
  const auto& part = compound->parts.front();
  return !part.duration && (part.counter == Counter::Nichi || part.counter == Counter::Nen);
}

}  // namespace

std::string_view counter_name(Counter counter) {
  switch (counter) {
    case Counter::Nen: return "nen";
    case Counter::Gatsu: return "gatsu";
    case Counter::Nichi: return "nichi";
    case Counter::Ji: return "ji";
    case Counter::Fun: return "fun";
  }
  return "";
}

std::vector<Token> tokenize(std::string_view input) {
  auto canonical = romaji::canonicalize(input);
  if (!canonical) throw Error(ErrorCode::IllegalCharacter, "illegal character in input");

  std::vector<Token> tokens;
  std::size_t pos = 0;
  const std::string& text = *canonical;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == '\t') {
      ++pos;
      continue;
    }
    const auto end = text.find_first_of(" \t", pos);
    const std::string_view word(text.data() + pos, (end == std::string::npos ? text.size() : end) - pos);
    pos = end == std::string::npos ? text.size() : end;

    std::size_t start = 0;
    bool first = true;
    while (true) {
      const auto hyphen = word.find('-', start);
      const auto morpheme = word.substr(start, hyphen == std::string_view::npos ? word.npos : hyphen - start);
      if (morpheme.empty()) {
        throw Error(ErrorCode::IllegalCharacter, "empty morpheme in '" + std::string(word) + "'");
      }
      Token token;
      token.attached = !first;
      if (all_digits(morpheme)) {
        token.kind = TokenKind::Numeral;
        token.text = std::string(morpheme);
      } else if (auto c = lookup(kCounters, morpheme)) {
        token.kind = TokenKind::Counter;
        token.text = std::string(*c);
      } else if (auto p = lookup(kParticles, morpheme)) {
        token.kind = TokenKind::Particle;
        token.text = std::string(*p);
      } else {
        token.kind = TokenKind::Lemma;
        token.text = std::string(morpheme);
      }
      tokens.push_back(std::move(token));
      first = false;
      if (hyphen == std::string_view::npos) break;
      start = hyphen + 1;
    }
  }
  if (tokens.empty()) throw Error(ErrorCode::EmptyInput, "empty input");
  return tokens;
}

std::string render_tokens(const std::vector<Token>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += tokens[i].attached ? '-' : ' ';
    out += tokens[i].text;
  }
  return out;
}

TemporalPhrase parse_temporal(const std::vector<Token>& tokens, const Lexicon& lexicon, Domain domain) {
  if (tokens.empty()) throw Error(ErrorCode::EmptyInput, "empty input");

  std::vector<std::vector<Token>> units;
  std::vector<Token> current;
  std::optional<std::string> particle;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.kind != TokenKind::Particle) {
      current.push_back(t);
      continue;
    }
    if (current.empty()) {
      throw Error(ErrorCode::DanglingParticle, "particle '" + t.text + "' has no head");
    }
    if (t.text != "no" && i + 1 != tokens.size()) {
      throw Error(ErrorCode::MisplacedParticle,
                  "particle '" + t.text + "' may only close the whole expression");
    }
    units.push_back(std::move(current));
    current.clear();
    if (t.text != "no") particle = t.text;
  }
  if (!current.empty()) {
    units.push_back(std::move(current));
  } else if (!particle) {
    throw Error(ErrorCode::DanglingParticle, "genitive -no has no head to modify");
  }

  TemporalPhrase phrase = parse_unit(units.back(), lexicon, domain);
  for (std::size_t i = 0; i + 1 < units.size(); ++i) {
    TemporalPhrase modifier = parse_unit(units[i], lexicon, domain);
    modifier.embedded = true;
    phrase.modifiers.push_back(std::move(modifier));
  }
  phrase.particle = particle;
  if (!particle && phrase.modifiers.empty() && is_ambiguous_position(phrase)) {
    phrase.diagnostics.push_back(
        "ambiguous: bare numeral compound read as a time position, not a duration");
  }
  return phrase;
}

TemporalPhrase parse_expression(std::string_view input, const Lexicon& lexicon, Domain domain) {
  return parse_temporal(tokenize(input), lexicon, domain);
}

std::optional<Attribute> head_attribute(const TemporalPhrase& phrase) {
  if (const auto* lexical = std::get_if<LexicalHead>(&phrase.head)) return lexical->entry.attribute;
  if (std::holds_alternative<RangeHead>(phrase.head)) {
    return std::get<RangeHead>(phrase.head).counter == Counter::Nichi
               ? std::optional<Attribute>(Attribute::DayOfMonth)
               : std::nullopt;
  }
  const auto& parts = std::get<CompoundHead>(phrase.head).parts;
  if (parts.empty() || parts.back().duration) return std::nullopt;
  switch (parts.back().counter) {
    case Counter::Nen: return Attribute::Year;
    case Counter::Gatsu: return Attribute::Month;
    case Counter::Nichi: return Attribute::DayOfMonth;
    case Counter::Ji:
    case Counter::Fun: return Attribute::NumberedHour;
  }
  return std::nullopt;
}

bool is_adverbial_context(const TemporalPhrase& phrase) {
  if (phrase.embedded) return false;
  if (phrase.particle) return *phrase.particle == "ni" || *phrase.particle == "de";
  const auto attr = head_attribute(phrase);
  return attr && subsumes(Attribute::DeicticDay, *attr);
}

}  // namespace jtemporal
