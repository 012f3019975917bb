// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "goldens.hpp"
#include "jtemporal/calendar.hpp"
#include "jtemporal/error.hpp"
#include "jtemporal/semantics.hpp"
#include "oracles.hpp"

namespace {

using jtemporal::Attribute;
using jtemporal::CalendarDate;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (failures.size() < 10) failures.push_back(what);
    }
  }
};

bool run_criterion(const std::string& id, const std::string& title, double limit_seconds,
                   const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome.pass = false;
    outcome.failures.push_back(std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && seconds >= limit_seconds) {
    outcome.pass = false;
    outcome.failures.push_back("runtime limit exceeded");
  }
  std::ostringstream line;
  line << id << ' ' << (outcome.pass ? "PASS" : "FAIL") << "  " << title << ": " << outcome.detail << " ("
       << seconds << " s";
  if (limit_seconds > 0) line << ", limit " << limit_seconds << " s";
  line << ")";
  std::cout << line.str() << '\n';
  for (const auto& f : outcome.failures) std::cout << "    " << f << '\n';
  return outcome.pass;
}

std::string mismatch(const std::string& input, const std::string& got, const std::string& want) {
  return input + ": got '" + got + "', want '" + want + "'";
}

Outcome day_period_table() {
  Outcome o;
  const auto cases = golden::day_period_cases();
  int passed = 0;
  for (const auto& c : cases) {
    const auto t = fixture::translate(c.input);
    const bool ok = t.ok && t.output == c.expected;
    passed += ok;
    o.check(ok, mismatch(c.input, t.output, c.expected));
  }
  o.check(cases.size() == 52, "expected 52 cases");
  o.detail = std::to_string(passed) + "/" + std::to_string(cases.size()) + " golden cases";
  return o;
}

Outcome preposition_cascade() {
  Outcome o;
  std::map<std::string, int> per_branch;
  int passed = 0, total = 0;
  for (const auto& c : golden::cascade_cases()) {
    ++total;
    const auto got = jtemporal::choose_preposition(c.np);
    const bool ok = got == c.expected;
    passed += ok;
    ++per_branch[c.branch];
    o.check(ok, mismatch(c.label, std::string(jtemporal::preposition_name(got)),
                         std::string(jtemporal::preposition_name(c.expected))));
  }
  for (const auto& c : golden::adverbial_cases()) {
    ++total;
    const auto t = fixture::translate(c.input);
    const bool ok = t.output == c.expected;
    passed += ok;
    o.check(ok, mismatch(c.input, t.output, c.expected));
  }
  for (const char* branch : {"none", "at", "on", "in"}) {
    o.check(per_branch[branch] >= 2, std::string("branch covered fewer than twice: ") + branch);
  }
  o.check(per_branch["none"] + per_branch["at"] + per_branch["on"] + per_branch["in"] >= 25,
          "fewer than 25 cascade cases");
  o.detail = std::to_string(passed) + "/" + std::to_string(total) + " cases (none " +
             std::to_string(per_branch["none"]) + ", at " + std::to_string(per_branch["at"]) + ", on " +
             std::to_string(per_branch["on"]) + ", in " + std::to_string(per_branch["in"]) + ")";
  return o;
}

Outcome example_sets() {
  Outcome o;
  int passed = 0, total = 0;
  auto expect = [&](const std::string& label, const jtemporal::Translation& t, const std::string& want,
                    std::optional<jtemporal::Determiner> det = std::nullopt) {
    ++total;
    bool ok = t.ok && t.output == want;
    if (det) ok = ok && t.determiner == *det;
    passed += ok;
    o.check(ok, label + " " + mismatch(t.input, t.output, want));
  };

  for (const auto& c : golden::null_determiner_cases()) {
    expect("null determiner", fixture::translate(c.input), c.expected, c.determiner);
  }
  for (const auto& c : golden::null_modifier_cases()) {
    jtemporal::TransferConfig config;
    config.date_style = c.style;
    expect("null modifier", fixture::translate(c.input, config), c.expected, jtemporal::Determiner::Null);
  }
  for (const auto& c : golden::date_style_cases()) {
    jtemporal::TransferConfig config;
    config.date_style = c.style;
    expect("date style", fixture::translate(c.input, config), c.expected);
  }
  for (const auto& c : golden::genitive_cases()) expect("genitive", fixture::translate(c.input), c.expected);

  const CalendarDate monday{1997, 2, 17};
  o.check(oracle::weekday_by_zeller({1997, 2, 17}) == 0, "reference date is not a Monday");
  expect("last trading day", fixture::translate("zen-shūmatsu", fixture::stock_config(monday), {}), "last Friday");
  expect("market period", fixture::translate("maebike", fixture::stock_config(monday)), "Monday morning");

  o.detail = std::to_string(passed) + "/" + std::to_string(total) + " golden examples";
  return o;
}

Outcome calendar_oracle() {
  Outcome o;
  // Every date 1900-01-01 .. 2100-12-31 against a running day count that
  // starts from the oracle's own weekday for 1900-01-01.
  oracle::Date d{1900, 1, 1};
  int weekday = oracle::weekday_by_count(d);
  o.check(weekday == oracle::weekday_by_zeller(d), "oracles disagree on 1900-01-01");
  const std::int64_t base = jtemporal::to_day_number({1900, 1, 1});
  std::int64_t offset = 0;
  long dates = 0;
  for (; d.y <= 2100; d = oracle::next_day(d), weekday = (weekday + 1) % 7, ++offset) {
    const CalendarDate lib{d.y, d.m, d.d};
    const bool ok = static_cast<int>(jtemporal::weekday_of(lib)) == weekday &&
                    jtemporal::to_day_number(lib) - base == offset;
    o.check(ok, "weekday mismatch on " + jtemporal::to_iso(lib));
    ++dates;
  }

  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> year(1650, 2950), month(1, 12), day(1, 28);
  std::uniform_int_distribution<long> shift(-3000, 3000);
  for (int i = 0; i < 10000; ++i) {
    const CalendarDate start{year(rng), month(rng), day(rng)};
    const long a = shift(rng), b = shift(rng);
    const CalendarDate moved = jtemporal::add_days(start, a);
    o.check(jtemporal::add_days(moved, -a) == start, "inverse fails from " + jtemporal::to_iso(start));
    o.check(jtemporal::add_days(moved, b) == jtemporal::add_days(start, a + b),
            "associativity fails from " + jtemporal::to_iso(start));
    const oracle::Date stepped = oracle::step({start.year, start.month, start.day}, a);
    o.check(moved == CalendarDate{stepped.y, stepped.m, stepped.d},
            "add_days disagrees with stepping from " + jtemporal::to_iso(start));
  }
  o.detail = std::to_string(dates) + " dates, 10000 randomized add_days cases";
  return o;
}

Outcome trading_days() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> start(0, 300000);
  int resolved = 0, exhausted = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const CalendarDate ref = jtemporal::add_days({1700, 1, 1}, start(rng));
    const CalendarDate monday = jtemporal::week_start(ref);
    jtemporal::TradingCalendar cal;
    std::set<oracle::Date> oracle_holidays;
    const unsigned density = 1 + static_cast<unsigned>(rng() % 6);  // up to 6 in 7 weekdays closed
    for (int i = 1; i <= 21; ++i) {
      if (rng() % 7 < density) {
        const CalendarDate h = jtemporal::add_days(monday, -i);
        cal.holidays.insert(h);
        oracle_holidays.insert({h.year, h.month, h.day});
      }
    }
    const oracle::Date expected = oracle::last_open_day({ref.year, ref.month, ref.day}, oracle_holidays);
    try {
      const auto got = jtemporal::last_trading_day(ref, cal);
      ++resolved;
      o.check(cal.is_open(got.date), "result is closed: " + jtemporal::to_iso(got.date));
      o.check(got.date < monday, "result not before Monday: " + jtemporal::to_iso(got.date));
      for (CalendarDate t = jtemporal::add_days(got.date, 1); t < monday; t = jtemporal::add_days(t, 1)) {
        o.check(!cal.is_open(t), "open day skipped: " + jtemporal::to_iso(t));
      }
      o.check(got.date == CalendarDate{expected.y, expected.m, expected.d},
              "disagrees with backward scan for " + jtemporal::to_iso(ref));
    } catch (const jtemporal::Error& e) {
      ++exhausted;
      o.check(e.code() == jtemporal::ErrorCode::NoOpenDay && expected.y == 0,
              "unexpected error for " + jtemporal::to_iso(ref) + ": " + e.what());
    }
  }
  o.detail = "1000 trials (" + std::to_string(resolved) + " resolved, " + std::to_string(exhausted) +
             " with no open day in the lookback)";
  return o;
}

struct CliRun {
  int status;
  std::string out;
};

CliRun run_cli(const jtemporal::cli::RunConfig& config, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = jtemporal::cli::run(config, in, out, err);
  return {status, out.str()};
}

Outcome cli_contract() {
  Outcome o;
  namespace cli = jtemporal::cli;
  cli::RunConfig config;
  config.lexicon_path = cli::default_lexicon_path();
  config.format = cli::OutputFormat::JsonLines;

  std::string input;
  for (const auto& c : golden::day_period_cases()) input += c.input + "\n";
  input += "\nxyzzy-ni\nkotoshi-no kurisumasu\n13-nichi\n";

  const CliRun first = run_cli(config, input);
  const CliRun second = run_cli(config, input);
  o.check(first.out == second.out, "repeated runs differ");
  o.check(first.status == cli::kExitLineFailed, "mixed input should exit 2");

  auto repl = config;
  repl.mode = cli::Mode::Repl;
  o.check(run_cli(repl, input).out == first.out, "REPL output differs from batch");

  const std::set<std::string> keys{"input", "output", "structure_kind", "determiner", "preposition", "diagnostics"};
  std::istringstream lines(first.out);
  int records = 0;
  for (std::string line; std::getline(lines, line); ++records) {
    const auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      o.check(false, "not a JSON object: " + line);
      continue;
    }
    std::set<std::string> got;
    for (const auto& [k, v] : j.items()) got.insert(k);
    o.check(got == keys, "wrong field set: " + line);
    o.check(j["diagnostics"].is_array() && j["output"].is_string(), "wrong field types: " + line);
  }
  o.check(records == 56, "expected one record per input line");

  o.check(run_cli(config, "ashita\nkinō-no ban\n\n").status == cli::kExitOk, "clean input should exit 0");
  auto broken = config;
  broken.lexicon_path = "/nonexistent/lexicon.txt";
  o.check(run_cli(broken, "ashita\n").status == cli::kExitConfig, "missing lexicon should exit 1");
  auto stock = config;
  stock.transfer.domain = jtemporal::Domain::Stock;
  o.check(run_cli(stock, "maebike\n").status == cli::kExitConfig, "stock without date should exit 1");

  o.detail = std::to_string(records) + " records, byte-identical reruns, exit codes 0/1/2";
  return o;
}

Outcome hierarchy() {
  Outcome o;
  const std::map<Attribute, Attribute> parents{
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
  const auto& all = jtemporal::all_attributes();
  o.check(all.size() == parents.size() + 1, "node count");
  o.check(!jtemporal::parent_of(Attribute::TemporalNoun), "root has a parent");
  for (const auto& [child, parent] : parents) {
    o.check(jtemporal::parent_of(child) == parent,
            std::string("parent of ") + std::string(jtemporal::attribute_name(child)));
  }
  long checks = 0;
  for (Attribute a : all) {
    o.check(jtemporal::subsumes(a, a), "reflexivity");
    for (Attribute b : all) {
      if (a != b && jtemporal::subsumes(a, b)) o.check(!jtemporal::subsumes(b, a), "antisymmetry");
      for (Attribute c : all) {
        ++checks;
        if (jtemporal::subsumes(a, b) && jtemporal::subsumes(b, c)) {
          o.check(jtemporal::subsumes(a, c), "transitivity");
        }
      }
    }
  }
  o.detail = std::to_string(all.size()) + " nodes, " + std::to_string(checks) + " ordered triples";
  return o;
}

}  // namespace

int main() {
  bool all = true;
  all &= run_criterion("AC1", "day/period rule table", 1.0, day_period_table);
  all &= run_criterion("AC2", "preposition cascade", 1.0, preposition_cascade);
  all &= run_criterion("AC3", "worked examples", 0, example_sets);
  all &= run_criterion("AC4", "calendar oracle equivalence", 5.0, calendar_oracle);
  all &= run_criterion("AC5", "last trading day property", 0, trading_days);
  all &= run_criterion("AC6", "determinism and CLI contract", 0, cli_contract);
  all &= run_criterion("AC7", "hierarchy integrity", 0, hierarchy);
  std::cout << (all ? "all criteria passed" : "some criteria failed") << '\n';
  return all ? 0 : 1;
}
