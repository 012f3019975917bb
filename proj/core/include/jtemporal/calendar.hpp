#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "jtemporal/lexicon.hpp"

namespace jtemporal {

/// Proleptic Gregorian date.
struct CalendarDate {
  int year = 2000;
  int month = 1;
  int day = 1;

  auto operator<=>(const CalendarDate&) const = default;
};

enum class Weekday { Monday, Tuesday, Wednesday, Thursday, Friday, Saturday, Sunday };

inline constexpr int kMinSupportedYear = 1600;
inline constexpr int kMaxSupportedYear = 3000;

std::string_view weekday_name(Weekday weekday);

bool is_leap_year(int year);
int days_in_month(int year, int month);
/// Calendar validity only (month length, leap day); no range check.
bool is_valid_date(const CalendarDate& date);
bool in_supported_range(const CalendarDate& date);

/// Throws InvalidDate.
CalendarDate make_date(int year, int month, int day);

/// Days since 1970-01-01.
std::int64_t to_day_number(const CalendarDate& date);
CalendarDate from_day_number(std::int64_t days);

/// Throws InvalidDate for impossible dates, RangeExceeded outside
/// [kMinSupportedYear, kMaxSupportedYear].
Weekday weekday_of(const CalendarDate& date);

/// Throws RangeExceeded if the result leaves the supported range.
CalendarDate add_days(const CalendarDate& date, std::int64_t days);

/// to - from, in days.
std::int64_t days_between(const CalendarDate& from, const CalendarDate& to);

/// Strict YYYY-MM-DD; nullopt on malformed or impossible dates.
std::optional<CalendarDate> parse_iso_date(std::string_view text);
std::string to_iso(const CalendarDate& date);

/// Monday of the week containing `date`.
CalendarDate week_start(const CalendarDate& date);

/// Applies the entry's day offset (kinō -1, yanoasatte +4). Throws NotDeictic.
CalendarDate resolve_deictic(const LexEntry& entry, const CalendarDate& reference);

struct TradingCalendar {
  std::set<Weekday> closed_weekdays{Weekday::Saturday, Weekday::Sunday};
  std::set<CalendarDate> holidays;

  bool is_open(const CalendarDate& date) const;
};

/// One ISO date per line, '#' comments. Throws FormatError with line number.
TradingCalendar load_holidays(std::string_view source);
TradingCalendar load_holidays_file(const std::filesystem::path& path);

struct TradingDay {
  CalendarDate date;
  Weekday weekday;
};

inline constexpr int kTradingLookback = 14;

/// Latest open day strictly before the Monday that starts the reference's
/// week, searching at most kTradingLookback days back. Throws NoOpenDay.
TradingDay last_trading_day(const CalendarDate& reference, const TradingCalendar& calendar);

}  // namespace jtemporal
