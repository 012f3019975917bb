#pragma once

#include <optional>

#include "jtemporal/parser.hpp"
#include "jtemporal/structure.hpp"

namespace jtemporal {

/// Replaces a single temporal noun by its lexicon equivalent. The first
/// gloss wins (the stock domain prefers a stock-gloss flag when present).
/// Throws NoGloss.
EnglishTemporalStructure transfer_single(const LexEntry& head, const TransferConfig& config = {});

/// Date/time position compound -> special compound NP. Throws SlotRange or
/// DurationNotPosition.
EnglishTemporalStructure transfer_compound_date(const CompoundHead& head);

/// "for N unit(s)" with the preposition fixed.
EnglishTemporalStructure transfer_duration(const NumeralCompound& head, const TransferConfig& config = {});

/// Day or deictic day + period of day (or night), Japanese "A-no B".
/// Throws UnsupportedCombination.
EnglishTemporalStructure transfer_day_period(const TemporalPhrase& a, const LexEntry& b,
                                             const TransferConfig& config = {});

/// Deictic anchor + member: (year, month) and (week, day of week), e.g.
/// ototoshi-no 1-gatsu "the January before last", raishū-no doyōbi "next
/// Saturday". Throws UnsupportedCombination.
EnglishTemporalStructure transfer_analogous_family(const TemporalPhrase& a, const TemporalPhrase& b,
                                                   const TransferConfig& config = {});

/// Complex phrases (at least one -no modifier): exception table for
/// NP + adverbial renderings, the rule families above, genitive default.
EnglishTemporalStructure decide_np_or_adverbial(const TemporalPhrase& phrase,
                                                const TransferConfig& config = {});

/// Preposition for particles and functional nouns other than ni/de/no.
/// Returns nullopt for ni and de (the cascade decides) and for no.
/// Throws UnknownParticle.
std::optional<Preposition> map_particle(const Token& particle, const Lexicon& lexicon);

/// Top-level dispatch over head kind and modifier count.
EnglishTemporalStructure transfer(const TemporalPhrase& phrase, const TransferConfig& config = {});

}  // namespace jtemporal
