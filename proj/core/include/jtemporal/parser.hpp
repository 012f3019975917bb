#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jtemporal/lexicon.hpp"

namespace jtemporal {

enum class TokenKind { Lemma, Numeral, Counter, Particle };

struct Token {
  std::string text;
  TokenKind kind = TokenKind::Lemma;
  bool attached = false;  // joined to the previous morpheme by '-'

  bool operator==(const Token&) const = default;
};

enum class Counter { Nen, Gatsu, Nichi, Ji, Fun };

std::string_view counter_name(Counter counter);

struct NumeralCompound {
  int value = 0;
  Counter counter = Counter::Nichi;
  bool duration = false;  // suffixed -kan

  bool operator==(const NumeralCompound&) const = default;
};

struct LexicalHead {
  LexEntry entry;
};

/// One numeral compound, or a fused date/time such as 2-gatsu-19-nichi.
/// Parts are ordered by strictly decreasing granularity.
struct CompoundHead {
  std::vector<NumeralCompound> parts;
};

/// "12-13-nichi": consecutive values sharing one counter.
struct RangeHead {
  int first = 0;
  int last = 0;
  Counter counter = Counter::Nichi;
};

using Head = std::variant<LexicalHead, CompoundHead, RangeHead>;

struct TemporalPhrase {
  std::vector<TemporalPhrase> modifiers;  // outermost first, each joined by -no
  Head head;
  std::optional<std::string> particle;    // only on the outermost phrase
  bool embedded = false;                  // true for -no modifiers
  std::vector<std::string> diagnostics;
};

/// Splits pre-segmented romaji into tokens. Words are separated by spaces,
/// morphemes by hyphens. Throws EmptyInput or IllegalCharacter.
std::vector<Token> tokenize(std::string_view input);

/// Inverse of tokenize for canonical tokens.
std::string render_tokens(const std::vector<Token>& tokens);

/// Builds the modifier/head/particle structure. Throws UnknownLemma,
/// MalformedCompound, DanglingParticle, MisplacedParticle or EraYear.
TemporalPhrase parse_temporal(const std::vector<Token>& tokens, const Lexicon& lexicon,
                              Domain domain = Domain::General);

/// Convenience: tokenize + parse_temporal.
TemporalPhrase parse_expression(std::string_view input, const Lexicon& lexicon,
                                Domain domain = Domain::General);

/// Attribute of the phrase head. Numeral compounds take the attribute of
/// their narrowest unit; durations and host nouns have none.
std::optional<Attribute> head_attribute(const TemporalPhrase& phrase);

/// True iff the phrase is a temporal adverbial on the Japanese side: the
/// particle is ni or de, or there is no particle and the head is a
/// deictic day. Embedded (-no) phrases are never adverbial.
bool is_adverbial_context(const TemporalPhrase& phrase);

}  // namespace jtemporal
