#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jtemporal/calendar.hpp"
#include "jtemporal/lexicon.hpp"
#include "jtemporal/semantics.hpp"

namespace jtemporal {

/// NULL and ZERO are both silent. NULL marks definite reference to a
/// uniquely locatable time ("Ø Monday"); ZERO is the indefinite
/// plural/mass determiner ("Ø 13 days").
enum class Determiner { Null, Zero, The, This, Last, Next, Every, Some, A };

std::string_view determiner_name(Determiner d);     // "NULL", "ZERO", "the", ...
std::string_view determiner_surface(Determiner d);  // "" for NULL/ZERO

enum class Preposition { None, At, On, In, Before, During, From, Until, For };

std::string_view preposition_name(Preposition p);  // "none", "at", ...
std::optional<Preposition> parse_preposition(std::string_view text);

enum class Dialect { American, British, Australian };
enum class DateStyle { MonthTheOrdinal, MonthCardinal, MonthOrdinal, OrdinalOfMonth };

std::string_view dialect_name(Dialect d);
std::optional<Dialect> parse_dialect(std::string_view text);
std::string_view date_style_name(DateStyle s);
std::optional<DateStyle> parse_date_style(std::string_view text);
std::string_view domain_name(Domain d);
std::optional<Domain> parse_domain(std::string_view text);

struct TransferConfig {
  Dialect dialect = Dialect::American;
  DateStyle date_style = DateStyle::MonthCardinal;
  Domain domain = Domain::General;
  std::optional<CalendarDate> reference_date;
  bool emit_optional_on = true;
  bool spell_numbers = false;
  /// Premodifiers that make a temporal NP adverbial on its own.
  std::set<std::string> quantifiers{"every", "each", "some", "any"};
  /// Maximum distance for rewriting dates as weekdays in stock reports.
  int weekday_window = 7;

  /// Throws MissingReferenceDate if the stock domain has no reference date.
  void validate() const;
};

/// Deep-copying owning pointer, for the recursive structure variants.
template <typename T>
class Box {
 public:
  Box() = default;
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  Box(const Box& other) : ptr_(other.ptr_ ? std::make_unique<T>(*other.ptr_) : nullptr) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = other.ptr_ ? std::make_unique<T>(*other.ptr_) : nullptr;
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  const T& operator*() const { return *ptr_; }
  T& operator*() { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }
  T* operator->() { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) {
    if (!a.ptr_ || !b.ptr_) return a.ptr_ == b.ptr_;
    return *a.ptr_ == *b.ptr_;
  }

 private:
  std::unique_ptr<T> ptr_;
};

enum class Span { None, Beginning, Middle, End };

/// Ordinary English NP: determiner, premodifiers, head, postmodifiers.
struct DeterminedNP {
  Determiner determiner = Determiner::Null;
  std::vector<std::string> premodifiers;
  std::string head;
  std::vector<std::string> postmodifiers;
  std::optional<Attribute> head_attribute;
  bool night = false;
  Span span = Span::None;
  /// Set when the preposition is fixed ahead of generation (durations take
  /// "for", particle-mapped adverbials take before/during/...).
  std::optional<Preposition> fixed_preposition;

  bool operator==(const DeterminedNP&) const = default;
};

struct DayOfMonthSlot {
  int value = 1;
  bool ordinal = false;  // forced ordinal rendering ("A must be ordinal")
  bool operator==(const DayOfMonthSlot&) const = default;
};

struct TimeSlot {
  int hour = 0;
  std::optional<int> minute;
  bool operator==(const TimeSlot&) const = default;
};

/// Headless date/time NP with year, month, day-of-month and time slots.
struct SpecialCompoundNP {
  std::optional<int> year;
  std::optional<int> month;
  std::optional<DayOfMonthSlot> day;
  std::optional<TimeSlot> time;

  bool empty() const { return !year && !month && !day && !time; }
  bool operator==(const SpecialCompoundNP&) const = default;
};

struct EnglishTemporalStructure;

/// NP followed by an adverbial that modifies it ("dawn tomorrow").
struct AdverbialAttachment {
  Box<EnglishTemporalStructure> base;
  Box<EnglishTemporalStructure> adjunct;
  bool operator==(const AdverbialAttachment&) const = default;
};

/// "this week's meeting".
struct GenitiveNP {
  Box<EnglishTemporalStructure> possessor;
  std::string possessed;
  bool operator==(const GenitiveNP&) const = default;
};

/// Untranslated input carried through with a diagnostic.
struct Passthrough {
  std::string text;
  bool operator==(const Passthrough&) const = default;
};

struct EnglishTemporalStructure {
  std::variant<DeterminedNP, SpecialCompoundNP, AdverbialAttachment, GenitiveNP, Passthrough> node;
  std::vector<std::string> diagnostics;

  EnglishTemporalStructure() = default;
  template <typename Node>
  EnglishTemporalStructure(Node n) : node(std::move(n)) {}

  std::string_view kind() const;

  template <typename Node>
  const Node* as() const { return std::get_if<Node>(&node); }

  bool operator==(const EnglishTemporalStructure&) const = default;
};

}  // namespace jtemporal
