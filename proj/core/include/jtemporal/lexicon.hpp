#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jtemporal/semantics.hpp"

namespace jtemporal {

enum class Domain { General, Stock };

/// One temporal (or host) noun of the source lexicon.
struct LexEntry {
  std::string surface;                  // canonical Hepburn, macrons
  std::optional<Attribute> attribute;   // nullopt for non-temporal host nouns
  std::vector<std::string> glosses;     // first gloss is the default rendering
  std::optional<int> deictic_offset;    // days from today; Deictic-Day only
  std::optional<int> relative_offset;   // unit offset for anchors (kotoshi 0, raishū +1, zenjitsu -1)
  std::map<std::string, std::string> flags;

  bool has_flag(std::string_view key) const;
  std::optional<std::string> flag(std::string_view key) const;

  bool is_night() const { return has_flag("night"); }
  bool is_rare() const { return has_flag("rare"); }
  bool is_era() const { return has_flag("era"); }
  /// Entries flagged domain=stock are only visible to the stock domain.
  bool is_stock_only() const;
};

/// Immutable-after-load lookup table from romanized lemma to entry, plus the
/// particle/functional-noun to preposition map.
class Lexicon {
 public:
  /// Throws DuplicateEntry if the canonical surface is already present.
  void add(LexEntry entry);
  void add_particle(std::string particle, std::string preposition);

  /// Exact canonical match first, then spelling-insensitive alias match.
  /// Stock-only entries are hidden unless `domain` is Stock.
  const LexEntry* find(std::string_view surface, Domain domain = Domain::General) const;
  /// As find() but throws UnknownLemma.
  const LexEntry& at(std::string_view surface, Domain domain = Domain::General) const;

  std::optional<std::string> preposition_for(std::string_view particle) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::map<std::string, LexEntry>& entries() const { return entries_; }
  const std::map<std::string, std::string>& particle_map() const { return particles_; }

 private:
  std::map<std::string, LexEntry> entries_;
  // fold key -> canonical surface; empty string marks an ambiguous alias
  std::unordered_map<std::string, std::string> aliases_;
  std::map<std::string, std::string> particles_;
};

/// Parses the pipe-separated lexicon format:
///
///     surface | attribute-name | gloss[;gloss...] | key=value, flag, ...
///
/// `#` starts a comment line. Attribute "particle" adds a particle_map row,
/// "none" a non-temporal host noun. Errors carry the 1-based line number.
Lexicon load_lexicon(std::string_view source);
Lexicon load_lexicon_file(const std::filesystem::path& path);

/// Attribute of a known lemma; nullopt for host nouns. Throws UnknownLemma.
std::optional<Attribute> attribute_of(std::string_view surface, const Lexicon& lexicon,
                                      Domain domain = Domain::General);

}  // namespace jtemporal
