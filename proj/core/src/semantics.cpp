#include "jtemporal/semantics.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "jtemporal/error.hpp"

namespace jtemporal {

namespace {

struct NodeInfo {
  Attribute attribute;
  std::optional<Attribute> parent;
  std::string_view name;
};

using A = Attribute;

constexpr std::array<NodeInfo, kAttributeCount> kNodes{{
    {A::TemporalNoun, std::nullopt, "temporal-noun"},
    {A::DeicticDay, A::TemporalNoun, "deictic-day"},
    {A::Day, A::TemporalNoun, "day"},
    {A::Hour, A::TemporalNoun, "hour"},
    {A::NonDayHour, A::TemporalNoun, "non-day/hour"},
    {A::NamedDay, A::Day, "named-day"},
    {A::RelativeDay, A::Day, "relative-day"},
    {A::DayOfMonth, A::Day, "day-of-month"},
    {A::DayOfWeek, A::NamedDay, "day-of-week"},
    {A::Holiday, A::NamedDay, "holiday"},
    {A::OrdinalDay, A::DayOfMonth, "ordinal-day"},
    {A::CardinalDay, A::DayOfMonth, "cardinal-day"},
    {A::NumberedHour, A::Hour, "numbered-hour"},
    {A::TimeOfDay, A::Hour, "time-of-day"},
    {A::Year, A::NonDayHour, "year"},
    {A::Season, A::NonDayHour, "season"},
    {A::Month, A::NonDayHour, "month"},
    {A::Week, A::NonDayHour, "week"},
    {A::PeriodOfDay, A::NonDayHour, "period-of-day"},
}};

const NodeInfo& info(Attribute attribute) {
  return kNodes[static_cast<std::size_t>(attribute)];
}

}  // namespace

const std::array<Attribute, kAttributeCount>& all_attributes() {
  static const std::array<Attribute, kAttributeCount> nodes = [] {
    std::array<Attribute, kAttributeCount> out{};
    for (std::size_t i = 0; i < kAttributeCount; ++i) out[i] = kNodes[i].attribute;
    return out;
  }();
  return nodes;
}

std::optional<Attribute> parent_of(Attribute attribute) { return info(attribute).parent; }

bool subsumes(Attribute ancestor, Attribute descendant) {
  std::optional<Attribute> node = descendant;
  while (node) {
    if (*node == ancestor) return true;
    node = parent_of(*node);
  }
  return false;
}

int depth_of(Attribute attribute) {
  int depth = 0;
  for (auto node = parent_of(attribute); node; node = parent_of(*node)) ++depth;
  return depth;
}

std::string_view attribute_name(Attribute attribute) { return info(attribute).name; }

std::optional<Attribute> parse_attribute_name(std::string_view name) {
  std::string key;
  key.reserve(name.size());
  for (char c : name) {
    if (c == '_' || c == ' ') c = '-';
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (key == "non-day-hour") key = "non-day/hour";
  auto it = std::find_if(kNodes.begin(), kNodes.end(),
                         [&](const NodeInfo& n) { return n.name == key; });
  if (it == kNodes.end()) return std::nullopt;
  return it->attribute;
}

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownLemma: return "UnknownLemma";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::DuplicateEntry: return "DuplicateEntry";
    case ErrorCode::UnknownAttributeName: return "UnknownAttributeName";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::IllegalCharacter: return "IllegalCharacter";
    case ErrorCode::MalformedCompound: return "MalformedCompound";
    case ErrorCode::DanglingParticle: return "DanglingParticle";
    case ErrorCode::MisplacedParticle: return "MisplacedParticle";
    case ErrorCode::EraYear: return "EraYear";
    case ErrorCode::NoGloss: return "NoGloss";
    case ErrorCode::SlotRange: return "SlotRange";
    case ErrorCode::DurationNotPosition: return "DurationNotPosition";
    case ErrorCode::UnsupportedCombination: return "UnsupportedCombination";
    case ErrorCode::UnknownParticle: return "UnknownParticle";
    case ErrorCode::EmptyCompound: return "EmptyCompound";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidDate: return "InvalidDate";
    case ErrorCode::RangeExceeded: return "RangeExceeded";
    case ErrorCode::NotDeictic: return "NotDeictic";
    case ErrorCode::NoOpenDay: return "NoOpenDay";
    case ErrorCode::UnknownJargon: return "UnknownJargon";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::MissingReferenceDate: return "MissingReferenceDate";
  }
  return "Unknown";
}

}  // namespace jtemporal
