#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jtemporal {

enum class ErrorCode {
  // lexicon
  UnknownLemma,
  FormatError,
  DuplicateEntry,
  UnknownAttributeName,
  // tokenizer / parser
  EmptyInput,
  IllegalCharacter,
  MalformedCompound,
  DanglingParticle,
  MisplacedParticle,
  EraYear,
  // transfer
  NoGloss,
  SlotRange,
  DurationNotPosition,
  UnsupportedCombination,
  UnknownParticle,
  // generation
  EmptyCompound,
  OutOfRange,
  // calendar
  InvalidDate,
  RangeExceeded,
  NotDeictic,
  NoOpenDay,
  UnknownJargon,
  // front end
  ConfigError,
  MissingReferenceDate,
};

std::string_view error_code_name(ErrorCode code);

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace jtemporal
