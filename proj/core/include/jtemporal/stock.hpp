#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "jtemporal/calendar.hpp"
#include "jtemporal/structure.hpp"

// Stock-report conventions: English reports name weekdays where Japanese
// reports give dates, resolve "last weekend" to the last trading day, and
// anchor session jargon to the report's weekday.
namespace jtemporal {

struct ReportHeader {
  CalendarDate report_date;
  std::optional<TimeSlot> report_time;
};

/// Parses "DATE: YYYY-MM-DD[ hh:mm]". nullopt if the line is not a header.
std::optional<ReportHeader> parse_report_header(std::string_view line);

struct WeekdayExpression {
  std::string text;
  bool converted = false;  // false: fell back to a date rendering
};

/// Weekday names for dates within config.weekday_window days of the
/// reference, joined with "and" ("Tuesday and Wednesday"). Otherwise the
/// dates are rendered in config.date_style.
WeekdayExpression date_to_weekday_expr(std::span<const CalendarDate> dates, const CalendarDate& reference,
                                       const TransferConfig& config = {});
WeekdayExpression date_to_weekday_expr(const CalendarDate& date, const CalendarDate& reference,
                                       const TransferConfig& config = {});

/// Occurrence of day `day` (in `month`, if given) closest to the reference.
/// Throws InvalidDate if no such date exists near the reference.
CalendarDate nearest_day_of_month(int day, std::optional<int> month, const CalendarDate& reference);

/// "last Friday", or "last Thursday" when Friday was a holiday.
std::string last_trading_day_expr(const CalendarDate& reference, const TradingCalendar& calendar);

/// "<weekday of reference> <period>" for session jargon (maebike ->
/// "Monday morning"). Throws UnknownJargon outside the stock domain or for
/// entries without a period flag.
std::string anchor_market_period(const LexEntry& jargon, const CalendarDate& reference,
                                 Domain domain = Domain::Stock);

}  // namespace jtemporal
