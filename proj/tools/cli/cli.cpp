#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "jtemporal/calendar.hpp"
#include "jtemporal/error.hpp"
#include "jtemporal/lexicon.hpp"
#include "jtemporal/stock.hpp"

namespace jtemporal::cli {

namespace {

template <typename Enum>
CLI::Transformer choices(const std::map<std::string, Enum>& table) {
  return CLI::Transformer(table, CLI::ignore_case);
}

bool is_header(const std::string& line) { return line.rfind("DATE:", 0) == 0; }

void emit(const Translation& t, std::size_t line_no, OutputFormat format, std::ostream& out,
          std::ostream& err) {
  if (format == OutputFormat::JsonLines) {
    out << to_json(to_record(t)).dump() << '\n';
  } else {
    out << t.output << '\n';
    for (const auto& d : t.diagnostics) err << "line " << line_no << ": " << d << '\n';
  }
}

}  // namespace

OutputRecord to_record(const Translation& translation) {
  OutputRecord r;
  r.input = translation.input;
  r.output = translation.output;
  r.structure_kind = translation.structure_kind;
  r.determiner = std::string(determiner_name(translation.determiner));
  r.preposition = std::string(preposition_name(translation.preposition));
  r.diagnostics = translation.diagnostics;
  return r;
}

nlohmann::json to_json(const OutputRecord& record) {
  return nlohmann::json{{"input", record.input},
                        {"output", record.output},
                        {"structure_kind", record.structure_kind},
                        {"determiner", record.determiner},
                        {"preposition", record.preposition},
                        {"diagnostics", record.diagnostics}};
}

std::filesystem::path default_lexicon_path() {
  // The source-tree copy serves build-tree runs; installs fall back to the
  // data directory.
  const std::filesystem::path source = JTEMPORAL_DEFAULT_LEXICON;
  std::error_code ec;
  if (std::filesystem::exists(source, ec)) return source;
  return JTEMPORAL_INSTALLED_LEXICON;
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, int& exit_code) {
  RunConfig config;
  config.lexicon_path = default_lexicon_path();
  std::string reference;
  std::string lexicon = config.lexicon_path.string();
  std::string holidays;
  bool no_optional_on = false;
  bool repl = false;

  CLI::App app{"Translate romanized Japanese temporal expressions into English."};
  app.add_option("--dialect", config.transfer.dialect, "american or british")
      ->envname("JTEMPORAL_DIALECT")
      ->transform(choices<Dialect>({{"american", Dialect::American}, {"british", Dialect::British}}));
  app.add_option("--style", config.transfer.date_style, "date style")
      ->envname("JTEMPORAL_STYLE")
      ->transform(choices<DateStyle>({{"month-the-ordinal", DateStyle::MonthTheOrdinal},
                                      {"month-cardinal", DateStyle::MonthCardinal},
                                      {"month-ordinal", DateStyle::MonthOrdinal},
                                      {"ordinal-of-month", DateStyle::OrdinalOfMonth}}));
  app.add_option("--domain", config.transfer.domain, "general or stock")
      ->envname("JTEMPORAL_DOMAIN")
      ->transform(choices<Domain>({{"general", Domain::General}, {"stock", Domain::Stock}}));
  app.add_option("--reference-date", reference, "reference date YYYY-MM-DD")
      ->envname("JTEMPORAL_REFERENCE_DATE");
  app.add_option("--lexicon", lexicon, "lexicon file")->envname("JTEMPORAL_LEXICON");
  app.add_option("--holidays", holidays, "market holiday file")->envname("JTEMPORAL_HOLIDAYS");
  app.add_option("--format", config.format, "text or json-lines")
      ->envname("JTEMPORAL_FORMAT")
      ->transform(choices<OutputFormat>({{"text", OutputFormat::Text}, {"json-lines", OutputFormat::JsonLines}}));
  app.add_flag("--no-optional-on", no_optional_on, "drop optional \"on\" (American English)")
      ->envname("JTEMPORAL_NO_OPTIONAL_ON");
  app.add_flag("--spell-numbers", config.transfer.spell_numbers, "spell out numbers and ordinals")
      ->envname("JTEMPORAL_SPELL_NUMBERS");
  app.add_flag("--repl", repl, "interactive mode")->envname("JTEMPORAL_REPL");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    exit_code = app.exit(e) == 0 ? kExitOk : kExitConfig;
    return std::nullopt;
  }

  if (!reference.empty()) {
    auto date = parse_iso_date(reference);
    if (!date) {
      std::cerr << "ConfigError: invalid --reference-date '" << reference << "'\n";
      exit_code = kExitConfig;
      return std::nullopt;
    }
    config.transfer.reference_date = date;
  }
  config.transfer.emit_optional_on = !no_optional_on;
  config.lexicon_path = lexicon;
  if (!holidays.empty()) config.holidays_path = holidays;
  config.mode = repl ? Mode::Repl : Mode::Batch;
  return config;
}

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  Lexicon lexicon;
  TradingCalendar calendar;
  try {
    lexicon = load_lexicon_file(config.lexicon_path);
    if (config.holidays_path) calendar = load_holidays_file(*config.holidays_path);
  } catch (const Error& e) {
    err << error_code_name(e.code()) << ": " << e.what() << '\n';
    return kExitConfig;
  }

  const bool repl = config.mode == Mode::Repl;
  auto next_line = [&](std::string& line) {
    if (repl) err << "> " << std::flush;
    return static_cast<bool>(std::getline(in, line));
  };

  Translator translator(lexicon, config.transfer, calendar);
  std::string line;
  std::size_t line_no = 0;
  bool have_line = next_line(line);

  if (config.transfer.domain == Domain::Stock) {
    if (have_line && is_header(line)) {
      ++line_no;
      const auto header = parse_report_header(line);
      if (!header) {
        err << "ConfigError: malformed report header '" << line << "'\n";
        return kExitConfig;
      }
      translator.set_reference_date(header->report_date);
      have_line = next_line(line);
    }
    try {
      translator.config().validate();
    } catch (const Error& e) {
      err << error_code_name(e.code()) << ": " << e.what() << '\n';
      return kExitConfig;
    }
  }

  bool failed = false;
  while (have_line) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const Translation t = translator.translate(line);
    failed = failed || !t.ok;
    emit(t, line_no, config.format, out, err);
    if (repl) out.flush();
    have_line = next_line(line);
  }
  return failed ? kExitLineFailed : kExitOk;
}

}  // namespace jtemporal::cli
