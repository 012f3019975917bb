#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jtemporal/structure.hpp"

namespace jtemporal {

/// "1st", "2nd", "3rd", "4th", ..., "11th", ..., "21st", ..., "31st".
/// Throws OutOfRange outside 1..31.
std::string render_ordinal(int n);
/// "first" .. "thirty-first". Throws OutOfRange outside 1..31.
std::string spell_ordinal(int n);
/// "zero" .. "ninety-nine"; digits beyond that.
std::string spell_cardinal(int n);

/// English month name for 1..12. Throws OutOfRange.
std::string_view month_name(int month);

/// Minute absent: 12-hour "<h> o'clock". Minute present: 24-hour "H:MM".
/// Throws OutOfRange for hour outside 0..24 or minute outside 0..59.
std::string render_time(int hour, std::optional<int> minute = std::nullopt);

/// Renders a date/time compound in the given style. Throws EmptyCompound.
std::string realize_special_compound(const SpecialCompoundNP& np, DateStyle style,
                                     bool spell_ordinals = false);

struct DeterminerContext {
  std::optional<Attribute> head;
  bool modified = false;
  bool night = false;
};

/// Default determiner for a temporal head. Unmodified dates, named days,
/// deictic days, hours, months, years, seasons and night take NULL; the
/// day-of-month and the remaining period/week nouns take "the". Modified
/// heads ("Monday morning") take NULL.
Determiner choose_determiner(const DeterminerContext& context);

/// What the preposition cascade looks at: the head and its dependents.
struct NpFeatures {
  std::optional<Attribute> head_attribute;
  std::string head;
  Determiner determiner = Determiner::Null;
  std::vector<std::string> premodifiers;
  std::vector<std::string> postmodifiers;
  bool night = false;
  Span span = Span::None;

  bool modified() const { return !premodifiers.empty() || !postmodifiers.empty(); }
};

/// Features of the NP that heads `structure`. Special compounds take their
/// narrowest unit as head; attachments use their base NP.
NpFeatures features_of(const EnglishTemporalStructure& structure, const TransferConfig& config);

/// Chooses none/at/on/in for a temporal NP used as an adverbial:
///
///   1. deictic day or "tonight", or premodified by this/that/last/next,
///      a deictic-day noun or a quantifier, or postmodified by ago/later
///      -> no preposition
///   2. hour, unmodified night, or beginning/end -> at
///   3. day, or modified period of day -> on
///   4. otherwise -> in
Preposition choose_preposition(const NpFeatures& np,
                               const std::set<std::string>& quantifiers = TransferConfig{}.quantifiers);

struct Realization {
  std::string text;
  bool is_adverbial = false;
  Preposition preposition_used = Preposition::None;
  std::vector<std::string> diagnostics;
};

/// Surface string of the structure as a noun phrase.
std::string realize_np(const EnglishTemporalStructure& structure, const TransferConfig& config);

/// Noun-phrase realization wrapped as a Realization.
Realization realize_noun_phrase(const EnglishTemporalStructure& structure, const TransferConfig& config);

/// Adverbial realization. `mapped` is a preposition already selected from
/// the source particle (kara, made, mae, chū); it bypasses the cascade.
Realization realize_adverbial(const EnglishTemporalStructure& structure, const TransferConfig& config,
                              std::optional<Preposition> mapped = std::nullopt);

}  // namespace jtemporal
