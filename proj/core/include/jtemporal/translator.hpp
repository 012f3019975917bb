#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jtemporal/calendar.hpp"
#include "jtemporal/generation.hpp"
#include "jtemporal/lexicon.hpp"
#include "jtemporal/structure.hpp"

namespace jtemporal {

/// Result of translating one input expression.
struct Translation {
  std::string input;
  std::string output;
  std::string structure_kind;  // EnglishTemporalStructure variant, or "Blank"
  Determiner determiner = Determiner::Null;
  Preposition preposition = Preposition::None;
  bool is_adverbial = false;
  bool ok = true;
  std::vector<std::string> diagnostics;
};

/// Full pipeline: tokenize, parse, (stock conversions), transfer, generate.
/// Holds references to the lexicon and calendar; both must outlive it.
class Translator {
 public:
  Translator(const Lexicon& lexicon, TransferConfig config, const TradingCalendar& calendar);

  /// Never throws for problems with the expression itself: those produce a
  /// Passthrough translation with ok = false and a diagnostic.
  Translation translate(std::string_view expression) const;

  const TransferConfig& config() const { return config_; }
  void set_reference_date(const CalendarDate& date) { config_.reference_date = date; }

 private:
  const Lexicon& lexicon_;
  TransferConfig config_;
  const TradingCalendar& calendar_;
};

}  // namespace jtemporal
