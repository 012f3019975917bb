#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace jtemporal {

/// Node of the temporal noun-type hierarchy.
///
/// The tree is rooted at TemporalNoun. Preposition classes hang off the
/// second level: Day (on), Hour (at) and NonDayHour (in); DeicticDay nouns
/// form adverbials on their own.
enum class Attribute {
  TemporalNoun,
  DeicticDay,
  Day,
  Hour,
  NonDayHour,
  NamedDay,
  RelativeDay,
  DayOfMonth,
  DayOfWeek,
  Holiday,
  OrdinalDay,
  CardinalDay,
  NumberedHour,
  TimeOfDay,
  Year,
  Season,
  Month,
  Week,
  PeriodOfDay,
};

inline constexpr std::size_t kAttributeCount = 19;

/// Every node in declaration order (root first).
const std::array<Attribute, kAttributeCount>& all_attributes();

std::optional<Attribute> parent_of(Attribute attribute);

/// True iff `ancestor` lies on the path from `descendant` to the root,
/// inclusive of both ends.
bool subsumes(Attribute ancestor, Attribute descendant);

/// Number of parent steps from `attribute` to the root.
int depth_of(Attribute attribute);

/// Lowercase hyphenated label, e.g. "day-of-week", "non-day/hour".
std::string_view attribute_name(Attribute attribute);

/// Inverse of attribute_name. Also accepts "non-day-hour" and
/// case/underscore variants.
std::optional<Attribute> parse_attribute_name(std::string_view name);

}  // namespace jtemporal
