#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "jtemporal/calendar.hpp"
#include "jtemporal/generation.hpp"
#include "jtemporal/lexicon.hpp"
#include "jtemporal/parser.hpp"
#include "jtemporal/transfer.hpp"
#include "jtemporal/translator.hpp"

namespace {

const jtemporal::Lexicon& lexicon() {
  static const jtemporal::Lexicon kLexicon = jtemporal::load_lexicon_file(JTEMPORAL_BENCH_LEXICON);
  return kLexicon;
}

const std::vector<std::string>& inputs() {
  static const std::vector<std::string> kInputs{
      "ototoi-no asa",       "kinō-no ban",          "getsuyōbi-no gogo",     "19-nichi-no yūgata",
      "2-gatsu-19-nichi-ni", "raishū-no doyōbi-ni",  "ashita-no akegata",     "kotoshi-no kurisumasu",
      "konshū-no uchiawase", "2-gatsu-no hajime-ni", "1997-nen-2-gatsu-19-nichi", "13-nichi-kan"};
  return kInputs;
}

void BM_LexiconLoad(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(jtemporal::load_lexicon_file(JTEMPORAL_BENCH_LEXICON));
}
BENCHMARK(BM_LexiconLoad);

void BM_Parse(benchmark::State& state) {
  const auto& lex = lexicon();
  for (auto _ : state) {
    for (const auto& in : inputs()) benchmark::DoNotOptimize(jtemporal::parse_expression(in, lex));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(inputs().size()));
}
BENCHMARK(BM_Parse);

void BM_TransferAndRealize(benchmark::State& state) {
  const auto& lex = lexicon();
  std::vector<jtemporal::TemporalPhrase> phrases;
  for (const auto& in : inputs()) phrases.push_back(jtemporal::parse_expression(in, lex));
  const jtemporal::TransferConfig config;
  for (auto _ : state) {
    for (const auto& p : phrases) {
      benchmark::DoNotOptimize(jtemporal::realize_np(jtemporal::transfer(p, config), config));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(phrases.size()));
}
BENCHMARK(BM_TransferAndRealize);

void BM_FullPipeline(benchmark::State& state) {
  const jtemporal::TradingCalendar calendar;
  const jtemporal::Translator translator(lexicon(), {}, calendar);
  for (auto _ : state) {
    for (const auto& in : inputs()) benchmark::DoNotOptimize(translator.translate(in));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(inputs().size()));
}
BENCHMARK(BM_FullPipeline);

void BM_WeekdayOf(benchmark::State& state) {
  jtemporal::CalendarDate d{1900, 1, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(jtemporal::weekday_of(d));
    d = jtemporal::add_days(d, 1);
    if (d.year > 2100) d = {1900, 1, 1};
  }
}
BENCHMARK(BM_WeekdayOf);

void BM_LastTradingDay(benchmark::State& state) {
  jtemporal::TradingCalendar calendar;
  calendar.holidays.insert({1997, 2, 14});
  for (auto _ : state) benchmark::DoNotOptimize(jtemporal::last_trading_day({1997, 2, 17}, calendar));
}
BENCHMARK(BM_LastTradingDay);

}  // namespace
BENCHMARK_MAIN();
