#include "jtemporal/structure.hpp"

#include <array>
#include <utility>

#include "jtemporal/error.hpp"

namespace jtemporal {

namespace {

template <typename E, std::size_t N>
std::optional<E> find_by_name(const std::array<std::pair<E, std::string_view>, N>& table,
                              std::string_view text) {
  for (const auto& [value, name] : table) {
    if (name == text) return value;
  }
  return std::nullopt;
}

template <typename E, std::size_t N>
std::string_view name_of(const std::array<std::pair<E, std::string_view>, N>& table, E value) {
  for (const auto& [v, name] : table) {
    if (v == value) return name;
  }
  return "";
}

constexpr std::array<std::pair<Preposition, std::string_view>, 9> kPrepositions{{
    {Preposition::None, "none"},
    {Preposition::At, "at"},
    {Preposition::On, "on"},
    {Preposition::In, "in"},
    {Preposition::Before, "before"},
    {Preposition::During, "during"},
    {Preposition::From, "from"},
    {Preposition::Until, "until"},
    {Preposition::For, "for"},
}};

constexpr std::array<std::pair<Dialect, std::string_view>, 3> kDialects{{
    {Dialect::American, "american"},
    {Dialect::British, "british"},
    {Dialect::Australian, "australian"},
}};

constexpr std::array<std::pair<DateStyle, std::string_view>, 4> kStyles{{
    {DateStyle::MonthTheOrdinal, "month-the-ordinal"},
    {DateStyle::MonthCardinal, "month-cardinal"},
    {DateStyle::MonthOrdinal, "month-ordinal"},
    {DateStyle::OrdinalOfMonth, "ordinal-of-month"},
}};

constexpr std::array<std::pair<Domain, std::string_view>, 2> kDomains{{
    {Domain::General, "general"},
    {Domain::Stock, "stock"},
}};

}  // namespace

std::string_view determiner_name(Determiner d) {
  switch (d) {
    case Determiner::Null: return "NULL";
    case Determiner::Zero: return "ZERO";
    default: return determiner_surface(d);
  }
}

std::string_view determiner_surface(Determiner d) {
  switch (d) {
    case Determiner::Null:
    case Determiner::Zero: return "";
    case Determiner::The: return "the";
    case Determiner::This: return "this";
    case Determiner::Last: return "last";
    case Determiner::Next: return "next";
    case Determiner::Every: return "every";
    case Determiner::Some: return "some";
    case Determiner::A: return "a";
  }
  return "";
}

std::string_view preposition_name(Preposition p) { return name_of(kPrepositions, p); }
std::optional<Preposition> parse_preposition(std::string_view text) {
  return find_by_name(kPrepositions, text);
}

std::string_view dialect_name(Dialect d) { return name_of(kDialects, d); }
std::optional<Dialect> parse_dialect(std::string_view text) { return find_by_name(kDialects, text); }

std::string_view date_style_name(DateStyle s) { return name_of(kStyles, s); }
std::optional<DateStyle> parse_date_style(std::string_view text) { return find_by_name(kStyles, text); }

std::string_view domain_name(Domain d) { return name_of(kDomains, d); }
std::optional<Domain> parse_domain(std::string_view text) { return find_by_name(kDomains, text); }

void TransferConfig::validate() const {
  if (domain == Domain::Stock && !reference_date) {
    throw Error(ErrorCode::MissingReferenceDate, "the stock domain needs a reference date");
  }
}

std::string_view EnglishTemporalStructure::kind() const {
  static constexpr std::array<std::string_view, 5> kKinds{
      "DeterminedNP", "SpecialCompoundNP", "AdverbialAttachment", "GenitiveNP", "Passthrough"};
  return kKinds[node.index()];
}

}  // namespace jtemporal
