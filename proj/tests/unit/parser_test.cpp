#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "jtemporal/error.hpp"
#include "jtemporal/parser.hpp"

using jtemporal::Attribute;
using jtemporal::Counter;
using jtemporal::ErrorCode;
using jtemporal::Token;
using jtemporal::TokenKind;

namespace {

ErrorCode parse_error(std::string_view input) {
  try {
    jtemporal::parse_expression(input, fixture::lexicon());
  } catch (const jtemporal::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << input;
  return ErrorCode::ConfigError;
}

const jtemporal::CompoundHead& compound(const jtemporal::TemporalPhrase& p) {
  return std::get<jtemporal::CompoundHead>(p.head);
}

}  // namespace

TEST(Tokenize, DateCompound) {
  const std::vector<Token> expected{{"2", TokenKind::Numeral, false},
                                    {"gatsu", TokenKind::Counter, true},
                                    {"19", TokenKind::Numeral, true},
                                    {"nichi", TokenKind::Counter, true}};
  EXPECT_EQ(jtemporal::tokenize("2-gatsu-19-nichi"), expected);
}

TEST(Tokenize, GenitiveChain) {
  const std::vector<Token> expected{{"ashita", TokenKind::Lemma, false},
                                    {"no", TokenKind::Particle, true},
                                    {"akegata", TokenKind::Lemma, false}};
  EXPECT_EQ(jtemporal::tokenize("ashita-no akegata"), expected);
}

TEST(Tokenize, Errors) {
  for (const char* input : {"", "   "}) {
    try {
      jtemporal::tokenize(input);
      FAIL() << input;
    } catch (const jtemporal::Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::EmptyInput);
    }
  }
  for (const char* input : {"kyō!", "今日", "ashita--no", "-ni"}) {
    try {
      jtemporal::tokenize(input);
      FAIL() << input;
    } catch (const jtemporal::Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::IllegalCharacter) << input;
    }
  }
}

TEST(Tokenize, RenderRoundTrip) {
  for (const char* input : {"2-gatsu-19-nichi-ni", "ashita-no akegata", "kotoshi-no kurisumasu",
                            "raishū-no doyōbi-ni", "13-nichi-kan", "kin'yōbi-no asa"}) {
    EXPECT_EQ(jtemporal::render_tokens(jtemporal::tokenize(input)), input);
  }
}

// Random token sequences in canonical form survive render -> tokenize.
TEST(Tokenize, RandomRoundTrip) {
  const std::vector<std::string> words{"kyō", "ashita", "asa", "2", "19", "gatsu", "nichi", "ni", "no", "kan"};
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::string text;
    const int n = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) {
      if (i > 0) text += rng() % 2 ? "-" : " ";
      text += words[rng() % words.size()];
    }
    const auto tokens = jtemporal::tokenize(text);
    EXPECT_EQ(jtemporal::render_tokens(tokens), text);
    EXPECT_EQ(jtemporal::tokenize(jtemporal::render_tokens(tokens)), tokens);
  }
}

TEST(Parse, GenitiveDate) {
  const auto p = jtemporal::parse_expression("2-gatsu-no 19-nichi", fixture::lexicon());
  ASSERT_EQ(p.modifiers.size(), 1u);
  EXPECT_TRUE(p.modifiers[0].embedded);
  EXPECT_EQ(compound(p.modifiers[0]).parts, (std::vector<jtemporal::NumeralCompound>{{2, Counter::Gatsu, false}}));
  EXPECT_EQ(compound(p).parts, (std::vector<jtemporal::NumeralCompound>{{19, Counter::Nichi, false}}));
}

TEST(Parse, FusedDate) {
  const auto p = jtemporal::parse_expression("2-gatsu-19-nichi", fixture::lexicon());
  EXPECT_TRUE(p.modifiers.empty());
  EXPECT_EQ(compound(p).parts,
            (std::vector<jtemporal::NumeralCompound>{{2, Counter::Gatsu, false}, {19, Counter::Nichi, false}}));
}

TEST(Parse, HolidayWithDeicticYear) {
  const auto p = jtemporal::parse_expression("kotoshi-no kurisumasu", fixture::lexicon());
  ASSERT_EQ(p.modifiers.size(), 1u);
  EXPECT_EQ(jtemporal::head_attribute(p.modifiers[0]), Attribute::Year);
  EXPECT_EQ(std::get<jtemporal::LexicalHead>(p.modifiers[0].head).entry.surface, "kotoshi");
  EXPECT_EQ(jtemporal::head_attribute(p), Attribute::Holiday);
}

TEST(Parse, DurationAndAmbiguity) {
  const auto dur = jtemporal::parse_expression("13-nichi-kan", fixture::lexicon());
  EXPECT_TRUE(compound(dur).parts.front().duration);
  EXPECT_FALSE(jtemporal::head_attribute(dur).has_value());

  const auto bare = jtemporal::parse_expression("13-nichi", fixture::lexicon());
  EXPECT_FALSE(compound(bare).parts.front().duration);
  EXPECT_EQ(bare.diagnostics.size(), 1u);

  const auto marked = jtemporal::parse_expression("13-nichi-ni", fixture::lexicon());
  EXPECT_TRUE(marked.diagnostics.empty());
}

TEST(Parse, Range) {
  const auto p = jtemporal::parse_expression("12-13-nichi-ni", fixture::lexicon());
  const auto& range = std::get<jtemporal::RangeHead>(p.head);
  EXPECT_EQ(range.first, 12);
  EXPECT_EQ(range.last, 13);
}

TEST(Parse, AdverbialContext) {
  const auto& lex = fixture::lexicon();
  EXPECT_TRUE(jtemporal::is_adverbial_context(jtemporal::parse_expression("getsuyōbi-ni", lex)));
  EXPECT_TRUE(jtemporal::is_adverbial_context(jtemporal::parse_expression("fuyu-de", lex)));
  EXPECT_TRUE(jtemporal::is_adverbial_context(jtemporal::parse_expression("kinō", lex)));
  EXPECT_FALSE(jtemporal::is_adverbial_context(jtemporal::parse_expression("getsuyōbi", lex)));
  const auto meeting = jtemporal::parse_expression("getsuyōbi-no uchiawase", lex);
  EXPECT_FALSE(jtemporal::is_adverbial_context(meeting.modifiers.at(0)));
}

TEST(Parse, Errors) {
  EXPECT_EQ(parse_error("xyzzy-ni"), ErrorCode::UnknownLemma);
  EXPECT_EQ(parse_error("kinō-no"), ErrorCode::DanglingParticle);
  EXPECT_EQ(parse_error("ni"), ErrorCode::DanglingParticle);
  EXPECT_EQ(parse_error("kinō-ni asa"), ErrorCode::MisplacedParticle);
  EXPECT_EQ(parse_error("heisei-3-nen"), ErrorCode::EraYear);
  EXPECT_EQ(parse_error("heisei"), ErrorCode::EraYear);
  EXPECT_EQ(parse_error("19-gatsu-2-gatsu"), ErrorCode::MalformedCompound);
  EXPECT_EQ(parse_error("19-nichi-2-gatsu"), ErrorCode::MalformedCompound);
  EXPECT_EQ(parse_error("gatsu"), ErrorCode::MalformedCompound);
  EXPECT_EQ(parse_error("maebike"), ErrorCode::UnknownLemma);
}

TEST(Parse, Deterministic) {
  const auto& lex = fixture::lexicon();
  for (const char* input : {"kotoshi-no kurisumasu", "2-gatsu-no 19-nichi-ni", "raishū-no doyōbi"}) {
    const auto a = jtemporal::parse_expression(input, lex);
    const auto b = jtemporal::parse_expression(input, lex);
    EXPECT_EQ(a.modifiers.size(), b.modifiers.size());
    EXPECT_EQ(a.particle, b.particle);
    EXPECT_EQ(jtemporal::head_attribute(a), jtemporal::head_attribute(b));
    EXPECT_EQ(a.diagnostics, b.diagnostics);
  }
}
