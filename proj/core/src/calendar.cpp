#include "jtemporal/calendar.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "jtemporal/error.hpp"
#include "text_util.hpp"

namespace jtemporal {

std::string_view weekday_name(Weekday weekday) {
  static constexpr std::array<std::string_view, 7> kNames{
      "Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday"};
  return kNames[static_cast<std::size_t>(weekday)];
}

bool is_leap_year(int year) { return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0; }

int days_in_month(int year, int month) {
  static constexpr std::array<int, 12> kLengths{31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month < 1 || month > 12) return 0;
  if (month == 2 && is_leap_year(year)) return 29;
  return kLengths[static_cast<std::size_t>(month - 1)];
}

bool is_valid_date(const CalendarDate& date) {
  return date.month >= 1 && date.month <= 12 && date.day >= 1 &&
         date.day <= days_in_month(date.year, date.month);
}

bool in_supported_range(const CalendarDate& date) {
  return date.year >= kMinSupportedYear && date.year <= kMaxSupportedYear;
}

CalendarDate make_date(int year, int month, int day) {
  CalendarDate date{year, month, day};
  if (!is_valid_date(date)) {
    throw Error(ErrorCode::InvalidDate, "invalid date: " + to_iso(date));
  }
  return date;
}

// Era-based civil day count (400-year cycles of 146097 days).
std::int64_t to_day_number(const CalendarDate& date) {
  const std::int64_t y = date.year - (date.month <= 2 ? 1 : 0);
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const std::int64_t yoe = y - era * 400;
  const std::int64_t mp = (date.month + 9) % 12;
  const std::int64_t doy = (153 * mp + 2) / 5 + date.day - 1;
  const std::int64_t doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + doe - 719468;
}

CalendarDate from_day_number(std::int64_t days) {
  days += 719468;
  const std::int64_t era = (days >= 0 ? days : days - 146096) / 146097;
  const std::int64_t doe = days - era * 146097;
  const std::int64_t yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const std::int64_t mp = (5 * doy + 2) / 153;
  const int day = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  const int month = static_cast<int>(mp < 10 ? mp + 3 : mp - 9);
  const int year = static_cast<int>(yoe + era * 400 + (month <= 2 ? 1 : 0));
  return {year, month, day};
}

namespace {

void require_supported(const CalendarDate& date) {
  if (!is_valid_date(date)) throw Error(ErrorCode::InvalidDate, "invalid date: " + to_iso(date));
  if (!in_supported_range(date)) {
    throw Error(ErrorCode::RangeExceeded, "date outside 1600-3000: " + to_iso(date));
  }
}

}  // namespace

Weekday weekday_of(const CalendarDate& date) {
  require_supported(date);
  // 1970-01-01 was a Thursday (index 3 from Monday).
  const std::int64_t n = to_day_number(date);
  const std::int64_t idx = ((n % 7) + 7 + 3) % 7;
  return static_cast<Weekday>(idx);
}

CalendarDate add_days(const CalendarDate& date, std::int64_t days) {
  require_supported(date);
  const CalendarDate result = from_day_number(to_day_number(date) + days);
  if (!in_supported_range(result)) {
    throw Error(ErrorCode::RangeExceeded, "date arithmetic left 1600-3000");
  }
  return result;
}

std::int64_t days_between(const CalendarDate& from, const CalendarDate& to) {
  return to_day_number(to) - to_day_number(from);
}

std::optional<CalendarDate> parse_iso_date(std::string_view text) {
  text = detail::trim(text);
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  auto y = detail::parse_int(text.substr(0, 4));
  auto m = detail::parse_int(text.substr(5, 2));
  auto d = detail::parse_int(text.substr(8, 2));
  if (!y || !m || !d) return std::nullopt;
  CalendarDate date{*y, *m, *d};
  if (!is_valid_date(date)) return std::nullopt;
  return date;
}

std::string to_iso(const CalendarDate& date) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", date.year, date.month, date.day);
  return buf;
}

CalendarDate week_start(const CalendarDate& date) {
  return add_days(date, -static_cast<int>(weekday_of(date)));
}

CalendarDate resolve_deictic(const LexEntry& entry, const CalendarDate& reference) {
  if (entry.attribute != Attribute::DeicticDay || !entry.deictic_offset) {
    throw Error(ErrorCode::NotDeictic, entry.surface + " is not a deictic day");
  }
  return add_days(reference, *entry.deictic_offset);
}

bool TradingCalendar::is_open(const CalendarDate& date) const {
  return !closed_weekdays.count(weekday_of(date)) && !holidays.count(date);
}

TradingCalendar load_holidays(std::string_view source) {
  TradingCalendar calendar;
  std::size_t line_no = 0;
  for (auto raw : detail::split(source, '\n')) {
    ++line_no;
    auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto date = parse_iso_date(line);
    if (!date) {
      throw Error(ErrorCode::FormatError, "holiday line " + std::to_string(line_no) +
                                              ": expected YYYY-MM-DD, got '" + std::string(line) + "'");
    }
    calendar.holidays.insert(*date);
  }
  return calendar;
}

TradingCalendar load_holidays_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open holiday file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_holidays(buffer.str());
}

TradingDay last_trading_day(const CalendarDate& reference, const TradingCalendar& calendar) {
  const CalendarDate monday = week_start(reference);
  for (int back = 1; back <= kTradingLookback; ++back) {
    const CalendarDate candidate = add_days(monday, -back);
    if (calendar.is_open(candidate)) return {candidate, weekday_of(candidate)};
  }
  throw Error(ErrorCode::NoOpenDay,
              "no trading day in the " + std::to_string(kTradingLookback) + " days before " + to_iso(monday));
}

}  // namespace jtemporal
