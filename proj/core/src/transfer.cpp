#include "jtemporal/transfer.hpp"

#include <array>
#include <set>

#include "jtemporal/error.hpp"
#include "jtemporal/generation.hpp"
#include "text_util.hpp"

namespace jtemporal {

namespace {

[[noreturn]] void unsupported(const std::string& what) {
  throw Error(ErrorCode::UnsupportedCombination, what);
}

bool is_under(const std::optional<Attribute>& attr, Attribute ancestor) {
  return attr && subsumes(ancestor, *attr);
}

const LexEntry* lexical_entry(const TemporalPhrase& phrase) {
  if (const auto* lex = std::get_if<LexicalHead>(&phrase.head)) return &lex->entry;
  return nullptr;
}

const CompoundHead* compound_head(const TemporalPhrase& phrase) {
  return std::get_if<CompoundHead>(&phrase.head);
}

bool is_position(const CompoundHead& head) {
  for (const auto& p : head.parts) {
    if (p.duration) return false;
  }
  return !head.parts.empty();
}

// "before last", "before the B before last", ... for |offset| >= 2.
std::string nested_postmodifier(const std::string& b, int steps, bool past) {
  const std::string dir = past ? "before" : "after";
  std::string out;
  for (int i = 2; i < steps; ++i) out += dir + " the " + b + " ";
  out += dir + (past ? " last" : " next");
  return out;
}

// Shared by the day/period table and the analogous families: renders
// member B at `offset` units from the anchor's "now".
DeterminedNP offset_phrase(const std::string& b, int offset) {
  DeterminedNP np;
  np.head = b;
  switch (offset) {
    case -1: np.determiner = Determiner::Last; break;
    case 0: np.determiner = Determiner::This; break;
    case 1: np.determiner = Determiner::Next; break;
    default:
      np.determiner = Determiner::The;
      np.postmodifiers.push_back(nested_postmodifier(b, offset < 0 ? -offset : offset, offset < 0));
      break;
  }
  return np;
}

const std::string& first_gloss(const LexEntry& entry) {
  if (entry.glosses.empty()) throw Error(ErrorCode::NoGloss, entry.surface + " has no English gloss");
  return entry.glosses.front();
}

bool gloss_has_determiner(const std::string& gloss) {
  static const std::set<std::string> kLeading{"the", "this", "last", "next", "every", "some", "a", "an"};
  return kLeading.count(detail::first_word(gloss)) > 0;
}

std::optional<Determiner> parse_determiner(std::string_view text) {
  static constexpr std::array<Determiner, 9> kAll{
      Determiner::Null, Determiner::Zero, Determiner::The, Determiner::This, Determiner::Last,
      Determiner::Next, Determiner::Every, Determiner::Some, Determiner::A};
  for (auto d : kAll) {
    if (determiner_name(d) == text) return d;
  }
  return std::nullopt;
}

Span span_of(const LexEntry& entry) {
  auto s = entry.flag("span");
  if (!s) return Span::None;
  if (*s == "beginning") return Span::Beginning;
  if (*s == "middle") return Span::Middle;
  if (*s == "end") return Span::End;
  return Span::None;
}

std::string_view unit_noun(Counter counter) {
  switch (counter) {
    case Counter::Nen: return "year";
    case Counter::Gatsu: return "month";
    case Counter::Nichi: return "day";
    case Counter::Ji: return "hour";
    case Counter::Fun: return "minute";
  }
  return "";
}

EnglishTemporalStructure transfer_range(const RangeHead& range, const TransferConfig& config) {
  if (range.counter != Counter::Nichi) unsupported("only day-of-month ranges are supported");
  if (range.first < 1 || range.last > 31) throw Error(ErrorCode::SlotRange, "day of month out of range");
  auto ord = [&](int n) { return config.spell_numbers ? spell_ordinal(n) : render_ordinal(n); };
  DeterminedNP np;
  np.determiner = Determiner::The;
  np.head_attribute = Attribute::OrdinalDay;
  np.head = range.last == range.first + 1 ? ord(range.first) + " and " + ord(range.last)
                                          : ord(range.first) + " to the " + ord(range.last);
  return np;
}

// A single unit: lexical head, numeral compound or range, no modifiers.
EnglishTemporalStructure transfer_unit(const TemporalPhrase& phrase, const TransferConfig& config) {
  EnglishTemporalStructure out;
  if (const auto* entry = lexical_entry(phrase)) {
    out = transfer_single(*entry, config);
  } else if (const auto* compound = compound_head(phrase)) {
    if (compound->parts.size() == 1 && compound->parts.front().duration) {
      out = transfer_duration(compound->parts.front(), config);
    } else {
      out = transfer_compound_date(*compound);
    }
  } else {
    out = transfer_range(std::get<RangeHead>(phrase.head), config);
  }
  out.diagnostics.insert(out.diagnostics.begin(), phrase.diagnostics.begin(), phrase.diagnostics.end());
  return out;
}

// Fuses runs of adjacent position compounds ("1997-nen-no 2-gatsu-no
// 19-nichi") when their units descend strictly.
std::vector<TemporalPhrase> merge_compounds(std::vector<TemporalPhrase> units) {
  std::vector<TemporalPhrase> out;
  for (auto& unit : units) {
    if (!out.empty()) {
      auto* prev = std::get_if<CompoundHead>(&out.back().head);
      const auto* next = compound_head(unit);
      if (prev && next && is_position(*prev) && is_position(*next) &&
          static_cast<int>(next->parts.front().counter) > static_cast<int>(prev->parts.back().counter)) {
        prev->parts.insert(prev->parts.end(), next->parts.begin(), next->parts.end());
        continue;
      }
    }
    out.push_back(std::move(unit));
  }
  return out;
}

// The modifier side of a complex phrase, possibly itself the product of an
// analogous-family rule ("raishū-no getsuyōbi" -> "next Monday").
struct Anchor {
  const TemporalPhrase* phrase = nullptr;
  std::optional<EnglishTemporalStructure> derived;
  std::optional<Attribute> attribute;

  EnglishTemporalStructure structure(const TransferConfig& config) const {
    return derived ? *derived : transfer_unit(*phrase, config);
  }
};

Anchor reduce_anchor(const std::vector<TemporalPhrase>& modifiers, const TransferConfig& config) {
  Anchor anchor;
  if (modifiers.size() == 1) {
    anchor.phrase = &modifiers.front();
    anchor.attribute = head_attribute(modifiers.front());
    return anchor;
  }
  if (modifiers.size() == 2) {
    anchor.derived = transfer_analogous_family(modifiers[0], modifiers[1], config);
    anchor.attribute = head_attribute(modifiers[1]);
    return anchor;
  }
  unsupported("more than two temporal modifiers");
}

EnglishTemporalStructure day_period(const Anchor& a, const LexEntry& b, const TransferConfig& config) {
  if (b.attribute != Attribute::PeriodOfDay || b.has_flag("det")) {
    unsupported(b.surface + " is not a period of day");
  }
  const std::string bw = first_gloss(b);
  DeterminedNP np;
  np.head = bw;
  np.head_attribute = Attribute::PeriodOfDay;
  np.night = b.is_night();

  if (a.derived) {
    if (!is_under(a.attribute, Attribute::NamedDay)) unsupported("derived anchor is not a named day");
    np.determiner = Determiner::Null;
    np.premodifiers.push_back(realize_np(*a.derived, config));
    return np;
  }

  if (const auto* entry = lexical_entry(*a.phrase)) {
    if (entry->attribute == Attribute::DeicticDay) {
      const int offset = *entry->deictic_offset;
      switch (offset) {
        case -1:
          np.determiner = Determiner::Null;
          np.premodifiers.push_back(np.night ? "last" : "yesterday");
          return np;
        case 0:
          if (np.night) {
            np.determiner = Determiner::Null;
            np.head = "tonight";
          } else {
            np.determiner = Determiner::This;
          }
          return np;
        case 1:
          np.determiner = Determiner::Null;
          np.premodifiers.push_back("tomorrow");
          return np;
        default:
          if (offset < -3 || offset > 4) unsupported("no day/period rule for offset " + std::to_string(offset));
          {
            DeterminedNP rel = offset_phrase(bw, offset);
            rel.head_attribute = np.head_attribute;
            rel.night = np.night;
            return rel;
          }
      }
    }
    if (entry->attribute == Attribute::RelativeDay) {
      const int rel = entry->relative_offset.value_or(0);
      if (rel != -1 && rel != 1) unsupported(entry->surface + " has no day/period rule");
      np.determiner = Determiner::The;
      np.premodifiers.push_back(rel < 0 ? "previous" : "following");
      return np;
    }
    if (is_under(entry->attribute, Attribute::NamedDay)) {
      np.determiner = Determiner::Null;
      np.premodifiers.push_back(first_gloss(*entry));
      return np;
    }
    unsupported(entry->surface + " cannot anchor a period of the day");
  }

  if (const auto* compound = compound_head(*a.phrase)) {
    if (is_position(*compound) && compound->parts.back().counter == Counter::Nichi) {
      EnglishTemporalStructure date = transfer_compound_date(*compound);
      auto sc = std::get<SpecialCompoundNP>(date.node);
      sc.day->ordinal = true;
      np.determiner = Determiner::The;
      np.postmodifiers.push_back("of " + realize_special_compound(sc, config.date_style, config.spell_numbers));
      return np;
    }
  }
  unsupported("no day/period rule for this anchor");
}

struct FamilyRow {
  Attribute anchor_unit;
  Attribute member_unit;
};

constexpr std::array<FamilyRow, 2> kFamilies{{
    {Attribute::Year, Attribute::Month},
    {Attribute::Week, Attribute::DayOfWeek},
}};

std::optional<std::string> family_member_gloss(const TemporalPhrase& b, Attribute unit) {
  if (unit == Attribute::Month) {
    const auto* compound = compound_head(b);
    if (compound && compound->parts.size() == 1 && is_position(*compound) &&
        compound->parts.front().counter == Counter::Gatsu) {
      const int m = compound->parts.front().value;
      if (m < 1 || m > 12) throw Error(ErrorCode::SlotRange, "month out of range: " + std::to_string(m));
      return std::string(month_name(m));
    }
    return std::nullopt;
  }
  const auto* entry = lexical_entry(b);
  if (entry && entry->attribute == unit && !entry->relative_offset) return first_gloss(*entry);
  return std::nullopt;
}

bool is_yearless_date(const TemporalPhrase& phrase) {
  const auto* compound = compound_head(phrase);
  if (!compound || !is_position(*compound)) return false;
  bool month = false, day = false;
  for (const auto& p : compound->parts) {
    if (p.counter == Counter::Nen) return false;
    month = month || p.counter == Counter::Gatsu;
    day = day || p.counter == Counter::Nichi;
  }
  return month && day;
}

bool is_every(const LexEntry& entry) { return entry.flag("det") == "every"; }

bool is_family_pair(const TemporalPhrase& a, const TemporalPhrase& b) {
  const auto* anchor = lexical_entry(a);
  if (!anchor || !(anchor->relative_offset || is_every(*anchor)) || !anchor->attribute) return false;
  for (const auto& row : kFamilies) {
    if (*anchor->attribute == row.anchor_unit && head_attribute(b) &&
        subsumes(row.member_unit, *head_attribute(b)) && family_member_gloss(b, row.member_unit)) {
      return true;
    }
  }
  return false;
}

}  // namespace

EnglishTemporalStructure transfer_single(const LexEntry& head, const TransferConfig& config) {
  std::string gloss;
  if (auto stock = head.flag("stock-gloss"); stock && config.domain == Domain::Stock && !stock->empty()) {
    gloss = *stock;
  } else {
    gloss = first_gloss(head);
  }

  DeterminedNP np;
  np.head = gloss;
  np.head_attribute = head.attribute;
  np.night = head.is_night();
  np.span = span_of(head);

  EnglishTemporalStructure out;
  if (auto det = head.flag("det")) {
    auto parsed = parse_determiner(*det);
    if (!parsed) unsupported("unknown determiner flag on " + head.surface + ": " + *det);
    np.determiner = *parsed;
  } else if (gloss_has_determiner(gloss)) {
    np.determiner = Determiner::Null;
  } else if (np.span != Span::None) {
    np.determiner = Determiner::The;
  } else if (!head.attribute) {
    np.determiner = Determiner::The;
    out.diagnostics.push_back("non-temporal noun '" + head.surface + "' translated by gloss only");
  } else {
    np.determiner = choose_determiner({head.attribute, false, np.night});
  }
  out.node = std::move(np);
  return out;
}

EnglishTemporalStructure transfer_compound_date(const CompoundHead& head) {
  if (head.parts.empty()) throw Error(ErrorCode::EmptyCompound, "empty numeral compound");
  SpecialCompoundNP sc;
  for (const auto& part : head.parts) {
    if (part.duration) {
      throw Error(ErrorCode::DurationNotPosition,
                  std::to_string(part.value) + "-" + std::string(counter_name(part.counter)) +
                      "-kan is a duration, not a time position");
    }
    auto range_error = [&](const char* what) {
      throw Error(ErrorCode::SlotRange, std::string(what) + " out of range: " + std::to_string(part.value));
    };
    switch (part.counter) {
      case Counter::Nen:
        sc.year = part.value;
        break;
      case Counter::Gatsu:
        if (part.value < 1 || part.value > 12) range_error("month");
        sc.month = part.value;
        break;
      case Counter::Nichi:
        if (part.value < 1 || part.value > 31) range_error("day of month");
        sc.day = DayOfMonthSlot{part.value, false};
        break;
      case Counter::Ji:
        if (part.value < 0 || part.value > 24) range_error("hour");
        sc.time = TimeSlot{part.value, std::nullopt};
        break;
      case Counter::Fun:
        if (!sc.time) unsupported("minutes need an hour (N-ji-M-fun)");
        if (part.value < 0 || part.value > 59) range_error("minute");
        sc.time->minute = part.value;
        break;
    }
  }
  if (sc.day && sc.month) {
    const int limit = sc.year ? days_in_month(*sc.year, *sc.month) : days_in_month(2000, *sc.month);
    if (sc.day->value > limit) {
      throw Error(ErrorCode::SlotRange, "no day " + std::to_string(sc.day->value) + " in month " +
                                            std::to_string(*sc.month));
    }
  }
  if (sc.time && sc.time->hour == 24 && sc.time->minute.value_or(0) != 0) {
    throw Error(ErrorCode::SlotRange, "24-ji only takes 0 minutes");
  }
  return sc;
}

EnglishTemporalStructure transfer_duration(const NumeralCompound& head, const TransferConfig& config) {
  if (!head.duration) unsupported("transfer_duration needs a -kan compound");
  DeterminedNP np;
  np.determiner = Determiner::Zero;
  np.premodifiers.push_back(config.spell_numbers ? spell_cardinal(head.value) : std::to_string(head.value));
  np.head = std::string(unit_noun(head.counter)) + (head.value == 1 ? "" : "s");
  np.fixed_preposition = Preposition::For;
  return np;
}

EnglishTemporalStructure transfer_day_period(const TemporalPhrase& a, const LexEntry& b,
                                             const TransferConfig& config) {
  Anchor anchor;
  anchor.phrase = &a;
  anchor.attribute = head_attribute(a);
  return day_period(anchor, b, config);
}

EnglishTemporalStructure transfer_analogous_family(const TemporalPhrase& a, const TemporalPhrase& b,
                                                   const TransferConfig& /*config*/) {
  const auto* anchor = lexical_entry(a);
  if (!anchor || !(anchor->relative_offset || is_every(*anchor)) || !anchor->attribute) {
    unsupported("the first element must be a deictic year or week");
  }
  for (const auto& row : kFamilies) {
    if (*anchor->attribute != row.anchor_unit) continue;
    auto member = family_member_gloss(b, row.member_unit);
    if (!member) continue;
    if (is_every(*anchor)) {
      // maishū-no getsuyōbi "every Monday"
      DeterminedNP np;
      np.determiner = Determiner::Every;
      np.head = *member;
      np.head_attribute = head_attribute(b);
      return EnglishTemporalStructure(std::move(np));
    }
    const int offset = *anchor->relative_offset;
    if (offset < -3 || offset > 4) unsupported("offset outside -3..+4");
    DeterminedNP np = offset_phrase(*member, offset);
    np.head_attribute = head_attribute(b);
    EnglishTemporalStructure out(std::move(np));
    if (offset == 0) {
      out.diagnostics.push_back("ambiguous: 'this " + *member +
                                "' may be read as the next or the most recent one");
    }
    return out;
  }
  unsupported("no rule family for this pair of units");
}

EnglishTemporalStructure decide_np_or_adverbial(const TemporalPhrase& phrase, const TransferConfig& config) {
  std::vector<TemporalPhrase> units = phrase.modifiers;
  TemporalPhrase head_unit = phrase;
  head_unit.modifiers.clear();
  head_unit.particle.reset();
  head_unit.embedded = false;
  units.push_back(std::move(head_unit));
  units = merge_compounds(std::move(units));

  EnglishTemporalStructure out;
  const TemporalPhrase& head = units.back();
  const std::vector<TemporalPhrase> modifiers(units.begin(), units.end() - 1);

  if (modifiers.empty()) {
    out = transfer_unit(head, config);
  } else {
    const Anchor anchor = reduce_anchor(modifiers, config);
    const LexEntry* head_entry = lexical_entry(head);
    const auto head_attr = head_attribute(head);
    const LexEntry* anchor_entry = anchor.derived ? nullptr : lexical_entry(*anchor.phrase);

    if (head_entry && !head_entry->attribute) {
      if (span_of(*head_entry) != Span::None) {
        // "the beginning of February"
        DeterminedNP np;
        np.determiner = Determiner::The;
        np.head = first_gloss(*head_entry);
        np.span = span_of(*head_entry);
        np.postmodifiers.push_back("of " + realize_np(anchor.structure(config), config));
        out = std::move(np);
      } else {
        // temporal phrase inside a larger non-temporal NP
        out = GenitiveNP{anchor.structure(config), first_gloss(*head_entry)};
      }
    } else if (anchor_entry && anchor_entry->attribute == Attribute::DeicticDay &&
               head_attr == Attribute::TimeOfDay) {
      out = AdverbialAttachment{transfer_single(*head_entry, config), transfer_single(*anchor_entry, config)};
    } else if (anchor_entry && anchor_entry->attribute == Attribute::Year && anchor_entry->relative_offset &&
               head_attr == Attribute::Holiday) {
      out = AdverbialAttachment{transfer_single(*head_entry, config), transfer_single(*anchor_entry, config)};
    } else if (anchor_entry && anchor_entry->attribute == Attribute::Year && anchor_entry->relative_offset &&
               is_yearless_date(head)) {
      // kyonen-no 12-gatsu-19-nichi "December 19 last year"
      out = AdverbialAttachment{transfer_unit(head, config), transfer_single(*anchor_entry, config)};
    } else if (head_entry && head_attr == Attribute::PeriodOfDay &&
               (is_under(anchor.attribute, Attribute::Day) || is_under(anchor.attribute, Attribute::DeicticDay))) {
      out = day_period(anchor, *head_entry, config);
    } else if (!anchor.derived && is_family_pair(*anchor.phrase, head)) {
      out = transfer_analogous_family(*anchor.phrase, head, config);
    } else {
      out = GenitiveNP{anchor.structure(config), realize_np(transfer_unit(head, config), config)};
      out.diagnostics.push_back("no dedicated rule for this combination; genitive rendering used");
    }
    if (anchor.derived) {
      out.diagnostics.insert(out.diagnostics.begin(), anchor.derived->diagnostics.begin(),
                             anchor.derived->diagnostics.end());
    }
  }
  out.diagnostics.insert(out.diagnostics.begin(), phrase.diagnostics.begin(), phrase.diagnostics.end());
  return out;
}

std::optional<Preposition> map_particle(const Token& particle, const Lexicon& lexicon) {
  if (particle.text == "ni" || particle.text == "de" || particle.text == "no") return std::nullopt;
  if (auto prep = lexicon.preposition_for(particle.text)) {
    if (auto parsed = parse_preposition(*prep)) return parsed;
  }
  throw Error(ErrorCode::UnknownParticle, "no preposition for particle '" + particle.text + "'");
}

EnglishTemporalStructure transfer(const TemporalPhrase& phrase, const TransferConfig& config) {
  if (!phrase.modifiers.empty()) return decide_np_or_adverbial(phrase, config);
  return transfer_unit(phrase, config);
}

}  // namespace jtemporal
