#include "jtemporal/generation.hpp"

#include <array>
#include <cstdio>

#include "jtemporal/error.hpp"
#include "text_util.hpp"

namespace jtemporal {

namespace {

constexpr std::array<std::string_view, 12> kMonths{
    "January", "February", "March",     "April",   "May",      "June",
    "July",    "August",   "September", "October", "November", "December"};

constexpr std::array<std::string_view, 20> kSmall{
    "zero",    "one",     "two",       "three",    "four",     "five",    "six",
    "seven",   "eight",   "nine",      "ten",      "eleven",   "twelve",  "thirteen",
    "fourteen", "fifteen", "sixteen",  "seventeen", "eighteen", "nineteen"};

constexpr std::array<std::string_view, 10> kTens{
    "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety"};

constexpr std::array<std::string_view, 20> kSmallOrdinal{
    "zeroth",     "first",      "second",      "third",      "fourth",
    "fifth",      "sixth",      "seventh",     "eighth",     "ninth",
    "tenth",      "eleventh",   "twelfth",     "thirteenth", "fourteenth",
    "fifteenth",  "sixteenth",  "seventeenth", "eighteenth", "nineteenth"};

constexpr std::array<std::string_view, 4> kTensOrdinal{"", "", "twentieth", "thirtieth"};

const std::set<std::string>& deictic_terms() {
  static const std::set<std::string> terms{"this", "that", "last", "next"};
  return terms;
}

const std::set<std::string>& deictic_day_nouns() {
  static const std::set<std::string> nouns{"today", "tomorrow", "yesterday", "tonight"};
  return nouns;
}

void require_ordinal_range(int n) {
  if (n < 1 || n > 31) throw Error(ErrorCode::OutOfRange, "ordinal out of range: " + std::to_string(n));
}

std::string day_text(const DayOfMonthSlot& day, bool ordinal, bool spell) {
  if (!ordinal) return std::to_string(day.value);
  return spell ? spell_ordinal(day.value) : render_ordinal(day.value);
}

bool is_under(const std::optional<Attribute>& attr, Attribute ancestor) {
  return attr && subsumes(ancestor, *attr);
}

}  // namespace

std::string render_ordinal(int n) {
  require_ordinal_range(n);
  std::string_view suffix = "th";
  if (n % 100 < 11 || n % 100 > 13) {
    switch (n % 10) {
      case 1: suffix = "st"; break;
      case 2: suffix = "nd"; break;
      case 3: suffix = "rd"; break;
      default: break;
    }
  }
  return std::to_string(n) + std::string(suffix);
}

std::string spell_ordinal(int n) {
  require_ordinal_range(n);
  if (n < 20) return std::string(kSmallOrdinal[n]);
  if (n % 10 == 0) return std::string(kTensOrdinal[n / 10]);
  return std::string(kTens[n / 10]) + "-" + std::string(kSmallOrdinal[n % 10]);
}

std::string spell_cardinal(int n) {
  if (n < 0 || n > 99) return std::to_string(n);
  if (n < 20) return std::string(kSmall[n]);
  if (n % 10 == 0) return std::string(kTens[n / 10]);
  return std::string(kTens[n / 10]) + "-" + std::string(kSmall[n % 10]);
}

std::string_view month_name(int month) {
  if (month < 1 || month > 12) {
    throw Error(ErrorCode::OutOfRange, "month out of range: " + std::to_string(month));
  }
  return kMonths[static_cast<std::size_t>(month - 1)];
}

std::string render_time(int hour, std::optional<int> minute) {
  if (hour < 0 || hour > 24 || (minute && (*minute < 0 || *minute > 59))) {
    throw Error(ErrorCode::OutOfRange, "time out of range");
  }
  if (!minute) {
    int h12 = hour % 12;
    if (h12 == 0) h12 = 12;
    return std::to_string(h12) + " o'clock";
  }
  char buf[16];
  std::snprintf(buf, sizeof buf, "%d:%02d", hour, *minute);
  return buf;
}

std::string realize_special_compound(const SpecialCompoundNP& np, DateStyle style, bool spell_ordinals) {
  if (np.empty()) throw Error(ErrorCode::EmptyCompound, "special compound has no filled slot");
  if (np.month) (void)month_name(*np.month);
  if (np.day) require_ordinal_range(np.day->value);

  if (np.day && np.day->ordinal && style == DateStyle::MonthCardinal) style = DateStyle::MonthOrdinal;

  std::string date;
  if (np.day && np.month) {
    const std::string month(month_name(*np.month));
    switch (style) {
      case DateStyle::MonthTheOrdinal:
        date = month + " the " + day_text(*np.day, true, spell_ordinals);
        break;
      case DateStyle::MonthCardinal:
        date = month + " " + day_text(*np.day, false, spell_ordinals);
        break;
      case DateStyle::MonthOrdinal:
        date = month + " " + day_text(*np.day, true, spell_ordinals);
        break;
      case DateStyle::OrdinalOfMonth:
        date = "the " + day_text(*np.day, true, spell_ordinals) + " of " + month;
        break;
    }
    if (np.year) {
      date += style == DateStyle::OrdinalOfMonth ? " " : ", ";
      date += std::to_string(*np.year);
    }
  } else if (np.day) {
    date = "the " + day_text(*np.day, true, spell_ordinals);
    if (np.year) date += ", " + std::to_string(*np.year);
  } else if (np.month) {
    date = std::string(month_name(*np.month));
    if (np.year) date += " " + std::to_string(*np.year);
  } else if (np.year) {
    date = std::to_string(*np.year);
  }

  if (!np.time) return date;
  const std::string time = render_time(np.time->hour, np.time->minute);
  if (date.empty()) return time;
  return time + (np.day ? " on " : " in ") + date;
}

Determiner choose_determiner(const DeterminerContext& context) {
  if (context.modified || context.night || !context.head) return Determiner::Null;
  const Attribute head = *context.head;
  if (subsumes(Attribute::DeicticDay, head) || subsumes(Attribute::NamedDay, head) ||
      subsumes(Attribute::Hour, head)) {
    return Determiner::Null;
  }
  switch (head) {
    case Attribute::Month:
    case Attribute::Year:
    case Attribute::Season:
      return Determiner::Null;
    default:
      return Determiner::The;
  }
}

NpFeatures features_of(const EnglishTemporalStructure& structure, const TransferConfig& config) {
  NpFeatures f;
  if (const auto* np = structure.as<DeterminedNP>()) {
    f.head_attribute = np->head_attribute;
    f.head = np->head;
    f.determiner = np->determiner;
    f.premodifiers = np->premodifiers;
    f.postmodifiers = np->postmodifiers;
    f.night = np->night;
    f.span = np->span;
  } else if (const auto* sc = structure.as<SpecialCompoundNP>()) {
    if (sc->time) {
      f.head_attribute = Attribute::NumberedHour;
      f.head = render_time(sc->time->hour, sc->time->minute);
    } else if (sc->day) {
      const bool ordinal = sc->day->ordinal || !sc->month || config.date_style != DateStyle::MonthCardinal;
      f.head_attribute = ordinal ? Attribute::OrdinalDay : Attribute::CardinalDay;
      f.head = ordinal ? render_ordinal(sc->day->value) : std::to_string(sc->day->value);
    } else if (sc->month) {
      f.head_attribute = Attribute::Month;
      f.head = std::string(month_name(*sc->month));
    } else if (sc->year) {
      f.head_attribute = Attribute::Year;
      f.head = std::to_string(*sc->year);
    }
  } else if (const auto* att = structure.as<AdverbialAttachment>()) {
    return features_of(*att->base, config);
  } else if (const auto* gen = structure.as<GenitiveNP>()) {
    f.head = gen->possessed;
    f.premodifiers.push_back(realize_np(*gen->possessor, config) + "'s");
  } else if (const auto* pass = structure.as<Passthrough>()) {
    f.head = pass->text;
  }
  return f;
}

Preposition choose_preposition(const NpFeatures& np, const std::set<std::string>& quantifiers) {
  auto triggers_bare = [&](const std::string& word) {
    return deictic_terms().count(word) || deictic_day_nouns().count(word) || quantifiers.count(word);
  };

  // 1. the NP is itself an adverbial
  bool bare = is_under(np.head_attribute, Attribute::DeicticDay) || np.head == "tonight";
  switch (np.determiner) {
    case Determiner::This:
    case Determiner::Last:
    case Determiner::Next:
    case Determiner::Every:
    case Determiner::Some:
      bare = true;
      break;
    default:
      if (quantifiers.count(std::string(determiner_surface(np.determiner)))) bare = true;
      break;
  }
  for (const auto& pre : np.premodifiers) bare = bare || triggers_bare(detail::first_word(pre));
  bare = bare || triggers_bare(detail::first_word(np.head));
  if (!np.postmodifiers.empty()) {
    const auto tail = detail::last_word(np.postmodifiers.back());
    bare = bare || tail == "ago" || tail == "later";
  }
  if (bare) return Preposition::None;

  // 2. precise moments
  const bool night = np.night || np.head == "night";
  if (is_under(np.head_attribute, Attribute::Hour) || (night && !np.modified()) ||
      np.span == Span::Beginning || np.span == Span::End) {
    return Preposition::At;
  }
  // 3. days and modified periods of the day
  if (np.span == Span::None &&
      (is_under(np.head_attribute, Attribute::Day) ||
       (is_under(np.head_attribute, Attribute::PeriodOfDay) && np.modified()))) {
    return Preposition::On;
  }
  // 4. everything else
  return Preposition::In;
}

std::string realize_np(const EnglishTemporalStructure& structure, const TransferConfig& config) {
  if (const auto* np = structure.as<DeterminedNP>()) {
    std::vector<std::string> words;
    words.emplace_back(determiner_surface(np->determiner));
    words.insert(words.end(), np->premodifiers.begin(), np->premodifiers.end());
    words.push_back(np->head);
    words.insert(words.end(), np->postmodifiers.begin(), np->postmodifiers.end());
    return detail::join(words, " ");
  }
  if (const auto* sc = structure.as<SpecialCompoundNP>()) {
    return realize_special_compound(*sc, config.date_style, config.spell_numbers);
  }
  if (const auto* att = structure.as<AdverbialAttachment>()) {
    return realize_np(*att->base, config) + " " + realize_adverbial(*att->adjunct, config).text;
  }
  if (const auto* gen = structure.as<GenitiveNP>()) {
    return realize_np(*gen->possessor, config) + "'s " + gen->possessed;
  }
  return std::get<Passthrough>(structure.node).text;
}

Realization realize_noun_phrase(const EnglishTemporalStructure& structure, const TransferConfig& config) {
  Realization r;
  r.text = realize_np(structure, config);
  r.diagnostics = structure.diagnostics;
  return r;
}

Realization realize_adverbial(const EnglishTemporalStructure& structure, const TransferConfig& config,
                              std::optional<Preposition> mapped) {
  Realization r;
  r.is_adverbial = true;
  r.diagnostics = structure.diagnostics;
  const std::string np_text = realize_np(structure, config);

  if (structure.as<Passthrough>()) {
    r.text = np_text;
    return r;
  }
  if (structure.as<GenitiveNP>() && !mapped) {
    r.text = np_text;
    r.diagnostics.push_back("non-temporal head: realized without a preposition");
    return r;
  }

  Preposition prep;
  const auto* determined = structure.as<DeterminedNP>();
  if (mapped) {
    prep = *mapped;
  } else if (determined && determined->fixed_preposition) {
    prep = *determined->fixed_preposition;
  } else {
    const NpFeatures features = features_of(structure, config);
    prep = choose_preposition(features, config.quantifiers);
    const bool optional_on =
        is_under(features.head_attribute, Attribute::DayOfWeek) ||
        (is_under(features.head_attribute, Attribute::PeriodOfDay) && features.modified());
    if (prep == Preposition::On && optional_on && config.dialect == Dialect::American &&
        !config.emit_optional_on) {
      prep = Preposition::None;
    }
  }
  r.preposition_used = prep;
  r.text = prep == Preposition::None ? np_text : std::string(preposition_name(prep)) + " " + np_text;
  return r;
}

}  // namespace jtemporal
