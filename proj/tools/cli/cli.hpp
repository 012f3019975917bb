#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jtemporal/structure.hpp"
#include "jtemporal/translator.hpp"

namespace jtemporal::cli {

enum class OutputFormat { Text, JsonLines };
enum class Mode { Batch, Repl };

struct RunConfig {
  TransferConfig transfer;
  std::filesystem::path lexicon_path;
  std::optional<std::filesystem::path> holidays_path;
  OutputFormat format = OutputFormat::Text;
  Mode mode = Mode::Batch;
};

/// One line of output. JSON field names are the member names.
struct OutputRecord {
  std::string input;
  std::string output;
  std::string structure_kind;
  std::string determiner;
  std::string preposition;
  std::vector<std::string> diagnostics;
};

OutputRecord to_record(const Translation& translation);
nlohmann::json to_json(const OutputRecord& record);

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitLineFailed = 2;

/// Lexicon shipped with the build: the source-tree copy if present, else
/// the installed one.
std::filesystem::path default_lexicon_path();

/// Parses flags (JTEMPORAL_* environment variables fill in unset flags).
/// Returns nullopt after printing help or an error; `exit_code` says which.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, int& exit_code);

/// Translates one expression per input line. In the stock domain the first
/// line may be a "DATE: YYYY-MM-DD[ hh:mm]" header. Returns 0 if every line
/// translated, 2 if any line failed, 1 on configuration errors.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace jtemporal::cli
