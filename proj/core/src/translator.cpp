#include "jtemporal/translator.hpp"

#include "jtemporal/error.hpp"
#include "jtemporal/parser.hpp"
#include "jtemporal/stock.hpp"
#include "jtemporal/transfer.hpp"
#include "text_util.hpp"

namespace jtemporal {

namespace {

Determiner top_determiner(const EnglishTemporalStructure& s) {
  if (const auto* np = s.as<DeterminedNP>()) return np->determiner;
  if (const auto* sc = s.as<SpecialCompoundNP>()) {
    return sc->day && !sc->month && !sc->time ? Determiner::The : Determiner::Null;
  }
  if (const auto* att = s.as<AdverbialAttachment>()) return top_determiner(*att->base);
  return Determiner::Null;
}

Translation from_structure(const EnglishTemporalStructure& s, const Realization& r) {
  Translation t;
  t.output = r.text;
  t.structure_kind = std::string(s.kind());
  t.determiner = top_determiner(s);
  t.preposition = r.preposition_used;
  t.is_adverbial = r.is_adverbial;
  t.diagnostics = r.diagnostics;
  return t;
}

// Bare weekday-anchored rendering; stock reports omit "on".
Translation bare_adverbial(const EnglishTemporalStructure& s, const TransferConfig& config) {
  Realization r;
  r.text = realize_np(s, config);
  r.is_adverbial = true;
  r.diagnostics = s.diagnostics;
  return from_structure(s, r);
}

std::optional<Translation> stock_route(const TemporalPhrase& phrase, const TransferConfig& config,
                                       const TradingCalendar& calendar) {
  if (!phrase.modifiers.empty()) return std::nullopt;
  const CalendarDate& reference = *config.reference_date;

  if (const auto* lex = std::get_if<LexicalHead>(&phrase.head)) {
    const LexEntry& entry = lex->entry;
    if (entry.has_flag("period")) {
      const std::string text = anchor_market_period(entry, reference, config.domain);
      DeterminedNP np;
      np.determiner = Determiner::Null;
      np.premodifiers.push_back(detail::first_word(text));
      np.head = *entry.flag("period");
      np.head_attribute = Attribute::PeriodOfDay;
      return bare_adverbial(np, config);
    }
    if (entry.flag("stock") == "last-trading-day") {
      const TradingDay day = last_trading_day(reference, calendar);
      DeterminedNP np;
      np.determiner = Determiner::Last;
      np.head = std::string(weekday_name(day.weekday));
      np.head_attribute = Attribute::DayOfWeek;
      EnglishTemporalStructure s(np);
      s.diagnostics.push_back("last trading day: " + to_iso(day.date));
      return bare_adverbial(s, config);
    }
    return std::nullopt;
  }

  std::vector<CalendarDate> dates;
  if (const auto* range = std::get_if<RangeHead>(&phrase.head)) {
    if (range->counter != Counter::Nichi) return std::nullopt;
    const CalendarDate first = nearest_day_of_month(range->first, std::nullopt, reference);
    for (int d = range->first; d <= range->last; ++d) {
      dates.push_back(add_days(first, d - range->first));
    }
  } else {
    const auto& parts = std::get<CompoundHead>(phrase.head).parts;
    if (parts.empty() || parts.back().counter != Counter::Nichi || parts.back().duration) return std::nullopt;
    std::optional<int> month;
    for (const auto& p : parts) {
      if (p.counter == Counter::Gatsu) month = p.value;
      if (p.counter == Counter::Nen) return std::nullopt;
    }
    dates.push_back(nearest_day_of_month(parts.back().value, month, reference));
  }
  const WeekdayExpression expr = date_to_weekday_expr(dates, reference, config);
  if (!expr.converted) return std::nullopt;
  DeterminedNP np;
  np.determiner = Determiner::Null;
  np.head = expr.text;
  np.head_attribute = Attribute::DayOfWeek;
  EnglishTemporalStructure s(np);
  for (const auto& d : dates) s.diagnostics.push_back("date " + to_iso(d));
  return bare_adverbial(s, config);
}

}  // namespace

Translator::Translator(const Lexicon& lexicon, TransferConfig config, const TradingCalendar& calendar)
    : lexicon_(lexicon), config_(std::move(config)), calendar_(calendar) {}

Translation Translator::translate(std::string_view expression) const {
  const std::string input(detail::trim(expression));
  if (input.empty()) {
    Translation blank;
    blank.structure_kind = "Blank";
    return blank;
  }
  try {
    config_.validate();
    const TemporalPhrase phrase = parse_expression(input, lexicon_, config_.domain);

    if (config_.domain == Domain::Stock) {
      if (auto routed = stock_route(phrase, config_, calendar_)) {
        routed->input = input;
        return *routed;
      }
    }

    const EnglishTemporalStructure structure = transfer(phrase, config_);
    std::optional<Preposition> mapped;
    if (phrase.particle && *phrase.particle != "wa") {
      mapped = map_particle(Token{*phrase.particle, TokenKind::Particle, true}, lexicon_);
    }
    const auto* np = structure.as<DeterminedNP>();
    const bool adverbial = mapped || is_adverbial_context(phrase) || (np && np->fixed_preposition);
    const Realization r = adverbial ? realize_adverbial(structure, config_, mapped)
                                    : realize_noun_phrase(structure, config_);
    Translation t = from_structure(structure, r);
    t.input = input;
    return t;
  } catch (const Error& e) {
    Translation t;
    t.input = input;
    t.output = input;
    t.structure_kind = "Passthrough";
    t.ok = false;
    t.diagnostics.push_back(std::string(error_code_name(e.code())) + ": " + e.what());
    return t;
  }
}

}  // namespace jtemporal
