#include <gtest/gtest.h>

#include <map>
#include <set>

#include "jtemporal/semantics.hpp"

using jtemporal::Attribute;

namespace {

// Parentage of the noun-type hierarchy.
const std::map<Attribute, Attribute>& expected_parents() {
  static const std::map<Attribute, Attribute> kParents{
      {Attribute::DeicticDay, Attribute::TemporalNoun}, {Attribute::Day, Attribute::TemporalNoun},
      {Attribute::Hour, Attribute::TemporalNoun},       {Attribute::NonDayHour, Attribute::TemporalNoun},
      {Attribute::NamedDay, Attribute::Day},            {Attribute::RelativeDay, Attribute::Day},
      {Attribute::DayOfMonth, Attribute::Day},          {Attribute::DayOfWeek, Attribute::NamedDay},
      {Attribute::Holiday, Attribute::NamedDay},        {Attribute::OrdinalDay, Attribute::DayOfMonth},
      {Attribute::CardinalDay, Attribute::DayOfMonth},  {Attribute::NumberedHour, Attribute::Hour},
      {Attribute::TimeOfDay, Attribute::Hour},          {Attribute::Year, Attribute::NonDayHour},
      {Attribute::Season, Attribute::NonDayHour},       {Attribute::Month, Attribute::NonDayHour},
      {Attribute::Week, Attribute::NonDayHour},         {Attribute::PeriodOfDay, Attribute::NonDayHour},
  };
  return kParents;
}

// Ancestor test by walking the expected parent map.
bool walk_subsumes(Attribute ancestor, Attribute node) {
  for (;;) {
    if (node == ancestor) return true;
    auto it = expected_parents().find(node);
    if (it == expected_parents().end()) return false;
    node = it->second;
  }
}

}  // namespace

TEST(Semantics, NodeSetIsExactlyTheTree) {
  EXPECT_EQ(jtemporal::all_attributes().size(), expected_parents().size() + 1);
  std::set<Attribute> seen(jtemporal::all_attributes().begin(), jtemporal::all_attributes().end());
  EXPECT_EQ(seen.size(), jtemporal::kAttributeCount);
  EXPECT_EQ(jtemporal::all_attributes().front(), Attribute::TemporalNoun);
}

TEST(Semantics, ParentageMatches) {
  EXPECT_FALSE(jtemporal::parent_of(Attribute::TemporalNoun).has_value());
  for (const auto& [child, parent] : expected_parents()) {
    EXPECT_EQ(jtemporal::parent_of(child), parent) << jtemporal::attribute_name(child);
  }
}

TEST(Semantics, SubsumesMatchesParentWalk) {
  for (Attribute a : jtemporal::all_attributes()) {
    for (Attribute b : jtemporal::all_attributes()) {
      EXPECT_EQ(jtemporal::subsumes(a, b), walk_subsumes(a, b))
          << jtemporal::attribute_name(a) << " / " << jtemporal::attribute_name(b);
    }
  }
}

TEST(Semantics, SubsumesIsAPartialOrder) {
  const auto& all = jtemporal::all_attributes();
  for (Attribute a : all) {
    EXPECT_TRUE(jtemporal::subsumes(a, a));
    for (Attribute b : all) {
      if (a != b && jtemporal::subsumes(a, b)) EXPECT_FALSE(jtemporal::subsumes(b, a));
      for (Attribute c : all) {
        if (jtemporal::subsumes(a, b) && jtemporal::subsumes(b, c)) EXPECT_TRUE(jtemporal::subsumes(a, c));
      }
    }
  }
}

TEST(Semantics, Examples) {
  EXPECT_TRUE(jtemporal::subsumes(Attribute::Day, Attribute::OrdinalDay));
  EXPECT_FALSE(jtemporal::subsumes(Attribute::Hour, Attribute::Season));
  EXPECT_EQ(jtemporal::depth_of(Attribute::TemporalNoun), 0);
  EXPECT_EQ(jtemporal::depth_of(Attribute::OrdinalDay), 3);
  EXPECT_EQ(jtemporal::depth_of(Attribute::PeriodOfDay), 2);
}

TEST(Semantics, NamesRoundTrip) {
  for (Attribute a : jtemporal::all_attributes()) {
    EXPECT_EQ(jtemporal::parse_attribute_name(jtemporal::attribute_name(a)), a);
  }
  EXPECT_EQ(jtemporal::attribute_name(Attribute::NonDayHour), "non-day/hour");
  EXPECT_EQ(jtemporal::parse_attribute_name("non-day-hour"), Attribute::NonDayHour);
  EXPECT_EQ(jtemporal::parse_attribute_name("Day_Of_Week"), Attribute::DayOfWeek);
  EXPECT_FALSE(jtemporal::parse_attribute_name("fortnight").has_value());
}
