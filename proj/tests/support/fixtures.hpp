#pragma once

#include <string_view>

#include "jtemporal/calendar.hpp"
#include "jtemporal/lexicon.hpp"
#include "jtemporal/translator.hpp"

namespace fixture {

// The lexicon shipped in core/data, loaded once.
inline const jtemporal::Lexicon& lexicon() {
  static const jtemporal::Lexicon kLexicon = jtemporal::load_lexicon_file(JTEMPORAL_TEST_LEXICON);
  return kLexicon;
}

inline jtemporal::Translation translate(std::string_view input, const jtemporal::TransferConfig& config = {},
                                        const jtemporal::TradingCalendar& calendar = {}) {
  return jtemporal::Translator(lexicon(), config, calendar).translate(input);
}

inline jtemporal::TransferConfig stock_config(const jtemporal::CalendarDate& reference) {
  jtemporal::TransferConfig config;
  config.domain = jtemporal::Domain::Stock;
  config.reference_date = reference;
  return config;
}

}  // namespace fixture
