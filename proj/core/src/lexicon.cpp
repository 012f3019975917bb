#include "jtemporal/lexicon.hpp"

#include <fstream>
#include <sstream>

#include "jtemporal/error.hpp"
#include "jtemporal/romaji.hpp"
#include "text_util.hpp"

namespace jtemporal {

bool LexEntry::has_flag(std::string_view key) const {
  return flags.find(std::string(key)) != flags.end();
}

std::optional<std::string> LexEntry::flag(std::string_view key) const {
  auto it = flags.find(std::string(key));
  if (it == flags.end()) return std::nullopt;
  return it->second;
}

bool LexEntry::is_stock_only() const {
  auto d = flag("domain");
  return d && *d == "stock";
}

void Lexicon::add(LexEntry entry) {
  const std::string key = entry.surface;
  if (entries_.count(key)) {
    throw Error(ErrorCode::DuplicateEntry, "duplicate lexicon entry: " + key);
  }
  const std::string folded = romaji::fold(key);
  auto [it, inserted] = aliases_.emplace(folded, key);
  if (!inserted && it->second != key) it->second.clear();
  entries_.emplace(key, std::move(entry));
}

void Lexicon::add_particle(std::string particle, std::string preposition) {
  if (particles_.count(particle)) {
    throw Error(ErrorCode::DuplicateEntry, "duplicate particle mapping: " + particle);
  }
  particles_.emplace(std::move(particle), std::move(preposition));
}

const LexEntry* Lexicon::find(std::string_view surface, Domain domain) const {
  const LexEntry* hit = nullptr;
  auto canonical = romaji::canonicalize(surface);
  if (!canonical) return nullptr;
  if (auto it = entries_.find(*canonical); it != entries_.end()) {
    hit = &it->second;
  } else if (auto alias = aliases_.find(romaji::fold(*canonical));
             alias != aliases_.end() && !alias->second.empty()) {
    hit = &entries_.at(alias->second);
  }
  if (hit && hit->is_stock_only() && domain != Domain::Stock) return nullptr;
  return hit;
}

const LexEntry& Lexicon::at(std::string_view surface, Domain domain) const {
  if (const auto* entry = find(surface, domain)) return *entry;
  throw Error(ErrorCode::UnknownLemma, "unknown lemma: " + std::string(surface));
}

std::optional<std::string> Lexicon::preposition_for(std::string_view particle) const {
  auto canonical = romaji::canonicalize(particle);
  if (!canonical) return std::nullopt;
  if (auto it = particles_.find(*canonical); it != particles_.end()) return it->second;
  const auto folded = romaji::fold(*canonical);
  for (const auto& [key, prep] : particles_) {
    if (romaji::fold(key) == folded) return prep;
  }
  return std::nullopt;
}

namespace {

[[noreturn]] void format_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::FormatError, "lexicon line " + std::to_string(line) + ": " + what);
}

void apply_flags(LexEntry& entry, std::string_view field, std::size_t line) {
  for (auto raw : detail::split(field, ',')) {
    auto item = detail::trim(raw);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    std::string key(detail::trim(item.substr(0, eq)));
    std::string value = eq == std::string_view::npos ? "" : std::string(detail::trim(item.substr(eq + 1)));
    if (key.empty()) format_error(line, "empty flag name");
    if (key == "offset" || key == "anchor") {
      auto n = detail::parse_int(value);
      if (!n) format_error(line, "flag " + key + " needs an integer value");
      (key == "offset" ? entry.deictic_offset : entry.relative_offset) = *n;
    }
    entry.flags[key] = value;
  }
}

}  // namespace

Lexicon load_lexicon(std::string_view source) {
  Lexicon lexicon;
  std::size_t line_no = 0;
  for (auto raw_line : detail::split(source, '\n')) {
    ++line_no;
    auto line = detail::trim(raw_line);
    if (line.empty() || line.front() == '#') continue;

    auto fields = detail::split(line, '|');
    if (fields.size() < 3 || fields.size() > 4) {
      format_error(line_no, "expected 3 or 4 pipe-separated fields");
    }
    auto surface = romaji::canonicalize(detail::trim(fields[0]));
    if (!surface || surface->empty()) format_error(line_no, "bad surface form");
    const auto attr_name = detail::trim(fields[1]);

    if (attr_name == "particle") {
      auto prep = detail::trim(fields[2]);
      if (prep.empty()) format_error(line_no, "particle without preposition");
      lexicon.add_particle(*surface, std::string(prep));
      continue;
    }

    LexEntry entry;
    entry.surface = *surface;
    if (attr_name != "none") {
      entry.attribute = parse_attribute_name(attr_name);
      if (!entry.attribute) {
        throw Error(ErrorCode::UnknownAttributeName,
                    "lexicon line " + std::to_string(line_no) + ": unknown attribute '" +
                        std::string(attr_name) + "'");
      }
    }
    for (auto gloss : detail::split(fields[2], ';')) {
      gloss = detail::trim(gloss);
      if (!gloss.empty()) entry.glosses.emplace_back(gloss);
    }
    if (fields.size() == 4) apply_flags(entry, fields[3], line_no);

    const bool deictic = entry.attribute == Attribute::DeicticDay;
    if (deictic != entry.deictic_offset.has_value()) {
      format_error(line_no, deictic ? "deictic-day entry needs offset=N"
                                    : "offset= is only valid on deictic-day entries");
    }
    try {
      lexicon.add(std::move(entry));
    } catch (const Error& e) {
      throw Error(e.code(), "lexicon line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return lexicon;
}

Lexicon load_lexicon_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open lexicon: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_lexicon(buffer.str());
}

std::optional<Attribute> attribute_of(std::string_view surface, const Lexicon& lexicon,
                                      Domain domain) {
  return lexicon.at(surface, domain).attribute;
}

}  // namespace jtemporal
