#include "jtemporal/stock.hpp"

#include <cstdlib>
#include <vector>

#include "jtemporal/error.hpp"
#include "jtemporal/generation.hpp"
#include "text_util.hpp"

namespace jtemporal {

std::optional<ReportHeader> parse_report_header(std::string_view line) {
  line = detail::trim(line);
  constexpr std::string_view kPrefix = "DATE:";
  if (line.substr(0, kPrefix.size()) != kPrefix) return std::nullopt;
  line = detail::trim(line.substr(kPrefix.size()));

  ReportHeader header;
  auto date = parse_iso_date(line.substr(0, 10));
  if (!date) return std::nullopt;
  header.report_date = *date;
  auto rest = detail::trim(line.substr(std::min<std::size_t>(10, line.size())));
  if (!rest.empty()) {
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) return std::nullopt;
    auto h = detail::parse_int(rest.substr(0, colon));
    auto m = detail::parse_int(rest.substr(colon + 1));
    if (!h || !m || *h < 0 || *h > 24 || *m < 0 || *m > 59) return std::nullopt;
    header.report_time = TimeSlot{*h, *m};
  }
  return header;
}

WeekdayExpression date_to_weekday_expr(std::span<const CalendarDate> dates, const CalendarDate& reference,
                                       const TransferConfig& config) {
  WeekdayExpression out;
  if (dates.empty()) return out;

  bool near = true;
  for (const auto& d : dates) {
    if (std::llabs(days_between(reference, d)) > config.weekday_window) near = false;
  }

  std::vector<std::string> parts;
  if (near) {
    for (const auto& d : dates) parts.emplace_back(weekday_name(weekday_of(d)));
    out.converted = true;
  } else {
    for (const auto& d : dates) {
      SpecialCompoundNP sc;
      sc.month = d.month;
      sc.day = DayOfMonthSlot{d.day, false};
      if (d.year != reference.year) sc.year = d.year;
      parts.push_back(realize_special_compound(sc, config.date_style, config.spell_numbers));
    }
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.text += i + 1 == parts.size() ? " and " : ", ";
    out.text += parts[i];
  }
  return out;
}

WeekdayExpression date_to_weekday_expr(const CalendarDate& date, const CalendarDate& reference,
                                       const TransferConfig& config) {
  return date_to_weekday_expr(std::span<const CalendarDate>(&date, 1), reference, config);
}

CalendarDate nearest_day_of_month(int day, std::optional<int> month, const CalendarDate& reference) {
  std::optional<CalendarDate> best;
  std::int64_t best_distance = 0;
  for (int shift = -1; shift <= 1; ++shift) {
    CalendarDate candidate;
    if (month) {
      candidate = {reference.year + shift, *month, day};
    } else {
      int m = reference.month + shift;
      int y = reference.year;
      if (m < 1) {
        m = 12;
        --y;
      } else if (m > 12) {
        m = 1;
        ++y;
      }
      candidate = {y, m, day};
    }
    if (!is_valid_date(candidate) || !in_supported_range(candidate)) continue;
    const auto distance = std::llabs(days_between(reference, candidate));
    if (!best || distance < best_distance) {
      best = candidate;
      best_distance = distance;
    }
  }
  if (!best) throw Error(ErrorCode::InvalidDate, "no day " + std::to_string(day) + " near " + to_iso(reference));
  return *best;
}

std::string last_trading_day_expr(const CalendarDate& reference, const TradingCalendar& calendar) {
  const TradingDay day = last_trading_day(reference, calendar);
  return "last " + std::string(weekday_name(day.weekday));
}

std::string anchor_market_period(const LexEntry& jargon, const CalendarDate& reference, Domain domain) {
  auto period = jargon.flag("period");
  if (domain != Domain::Stock || !period || period->empty()) {
    throw Error(ErrorCode::UnknownJargon, jargon.surface + " is not stock-market session jargon here");
  }
  return std::string(weekday_name(weekday_of(reference))) + " " + *period;
}

}  // namespace jtemporal
