#pragma once

// OBO-style term IRIs: base URI + prefix + join + local identifier, e.g.
//
//   http://purl.obolibrary.org/obo/ + GO + _ + 0000001
//
// Registry files hold one entry per line:
//
//   PREFIX<TAB>BASE_URI[<TAB>JOIN]
//
// Blank lines and lines starting with '#' are ignored. JOIN defaults to '_'.

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quintid/alphabet.hpp"
#include "quintid/checksum.hpp"
#include "quintid/codec.hpp"
#include "quintid/error.hpp"

namespace quintid {

struct PrefixEntry {
  std::string prefix;
  std::string base;
  char join = '_';

  friend bool operator==(const PrefixEntry&, const PrefixEntry&) = default;
};

namespace detail {

constexpr bool is_ascii_alpha(char c) noexcept { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
constexpr bool is_ascii_digit(char c) noexcept { return c >= '0' && c <= '9'; }

// RFC 3986 scheme, then ':' and at least one more character, with no
// whitespace, controls or characters that are never legal in an IRI.
inline bool is_absolute_uri(std::string_view s) {
  const auto colon = s.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 >= s.size()) return false;
  if (!is_ascii_alpha(s[0])) return false;
  for (std::size_t i = 1; i < colon; ++i) {
    const char c = s[i];
    if (!is_ascii_alpha(c) && !is_ascii_digit(c) && c != '+' && c != '-' && c != '.') return false;
  }
  for (const char c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || u == 0x7F) return false;
    if (std::string_view("<>\"{}|\\^`").find(c) != std::string_view::npos) return false;
  }
  return true;
}

inline void validate_entry(const PrefixEntry& e) {
  if (e.prefix.empty()) throw registry_error("empty prefix");
  if (!is_ascii_alpha(e.prefix[0]))
    throw registry_error("prefix '" + e.prefix + "' must start with a letter");
  for (const char c : e.prefix) {
    if (c == e.join)
      throw registry_error("prefix '" + e.prefix + "' contains its join character '" + std::string(1, e.join) + "'");
    if (!is_ascii_alpha(c) && !is_ascii_digit(c) && c != '.' && c != '-')
      throw registry_error("prefix '" + e.prefix + "' contains " + describe(c));
  }
  if (is_ascii_alpha(e.join) || is_ascii_digit(e.join) || static_cast<unsigned char>(e.join) <= 0x20 ||
      static_cast<unsigned char>(e.join) >= 0x7F)
    throw registry_error("join character " + describe(e.join) + " for prefix '" + e.prefix + "' is not punctuation");
  if (e.base.empty()) throw registry_error("empty base URI for prefix '" + e.prefix + "'");
  if (!is_absolute_uri(e.base))
    throw registry_error("base '" + e.base + "' for prefix '" + e.prefix + "' is not an absolute URI");
}

}  // namespace detail

/// Prefix -> base URI map. Immutable once built, so safe to share across
/// threads.
class PrefixRegistry {
 public:
  PrefixRegistry() = default;

  explicit PrefixRegistry(std::vector<PrefixEntry> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      detail::validate_entry(entries_[i]);
      for (std::size_t j = 0; j < i; ++j)
        if (entries_[j].prefix == entries_[i].prefix)
          throw registry_error("duplicate prefix '" + entries_[i].prefix + "'");
    }
  }

  /// Reads the tab-separated registry format. `source` names the input in
  /// error messages.
  static PrefixRegistry parse(std::istream& in, const std::string& source = "<registry>") {
    std::vector<PrefixEntry> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;

      std::vector<std::string> fields;
      std::size_t start = 0;
      for (;;) {
        const auto tab = line.find('\t', start);
        fields.push_back(line.substr(start, tab - start));
        if (tab == std::string::npos) break;
        start = tab + 1;
      }
      const auto where = source + ":" + std::to_string(lineno) + ": ";
      if (fields.size() < 2 || fields.size() > 3)
        throw registry_error(where + "expected PREFIX<TAB>BASE_URI[<TAB>JOIN]");
      PrefixEntry e{fields[0], fields[1], '_'};
      if (fields.size() == 3) {
        if (fields[2].size() != 1) throw registry_error(where + "join must be a single character");
        e.join = fields[2][0];
      }
      try {
        detail::validate_entry(e);
      } catch (const registry_error& err) {
        throw registry_error(where + err.what());
      }
      if (std::any_of(entries.begin(), entries.end(), [&](const auto& x) { return x.prefix == e.prefix; }))
        throw registry_error(where + "duplicate prefix '" + e.prefix + "'");
      entries.push_back(std::move(e));
    }
    return PrefixRegistry(std::move(entries));
  }

  static PrefixRegistry load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw registry_error("cannot open registry file '" + path.string() + "'");
    return parse(in, path.string());
  }

  const PrefixEntry* find(std::string_view prefix) const noexcept {
    for (const auto& e : entries_)
      if (e.prefix == prefix) return &e;
    return nullptr;
  }

  std::span<const PrefixEntry> entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

 private:
  std::vector<PrefixEntry> entries_;
};

enum class LocalKind { numeric, proquint, checked_proquint, opaque };

constexpr std::string_view to_string(LocalKind k) noexcept {
  switch (k) {
    case LocalKind::numeric: return "numeric";
    case LocalKind::proquint: return "proquint";
    case LocalKind::checked_proquint: return "checked-proquint";
    case LocalKind::opaque: return "opaque";
  }
  return "opaque";
}

struct LocalClass {
  LocalKind kind = LocalKind::opaque;
  std::optional<Width> width;  // for (checked) proquints

  friend bool operator==(const LocalClass&, const LocalClass&) = default;
};

namespace detail {

inline bool is_quint(std::string_view g) noexcept {
  return g.size() == 5 && alphabet::is_consonant(g[0]) && alphabet::is_vowel(g[1]) &&
         alphabet::is_consonant(g[2]) && alphabet::is_vowel(g[3]) && alphabet::is_consonant(g[4]);
}

}  // namespace detail

/// Structural classification of a local identifier. Only canonical
/// (lowercase, single-hyphen) proquints of 1, 2 or 4 groups count; three
/// groups are opaque. A checked proquint is classified by shape alone, so
/// one with a wrong check letter is still `checked_proquint`.
inline LocalClass classify_local(std::string_view local) {
  if (local.empty()) return {};
  if (std::all_of(local.begin(), local.end(), detail::is_ascii_digit)) return {LocalKind::numeric, std::nullopt};

  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto dash = local.find(alphabet::separator, start);
    parts.push_back(local.substr(start, dash == std::string_view::npos ? dash : dash - start));
    if (dash == std::string_view::npos) break;
    start = dash + 1;
  }

  const bool checked = parts.size() >= 2 && parts.back().size() == 1 && check_symbol_value(parts.back()[0]);
  const std::size_t groups = checked ? parts.size() - 1 : parts.size();
  for (std::size_t i = 0; i < groups; ++i)
    if (!detail::is_quint(parts[i])) return {};
  const auto width = width_from_groups(groups);
  if (!width) return {};
  return {checked ? LocalKind::checked_proquint : LocalKind::proquint, width};
}

struct TermIri {
  std::string base;
  std::string prefix;
  std::string local;
  std::string full;
};

struct IriParts {
  std::string prefix;
  std::string local;
  LocalClass local_class;

  LocalKind kind() const noexcept { return local_class.kind; }
};

/// Builds base + prefix + join + local. The local identifier must be
/// nonempty and use only digits, lowercase letters and '-'.
inline TermIri format_iri(const PrefixRegistry& registry, std::string_view prefix, std::string_view local) {
  const PrefixEntry* entry = registry.find(prefix);
  if (!entry) throw registry_error("unknown prefix '" + std::string(prefix) + "'");
  if (local.empty()) throw parse_error("", 0, "empty local identifier");
  for (std::size_t i = 0; i < local.size(); ++i) {
    const char c = local[i];
    if (!detail::is_ascii_digit(c) && !(c >= 'a' && c <= 'z') && c != '-')
      throw parse_error(std::string(local), i,
                        detail::describe(c) + " is not allowed in a local identifier (use 0-9, a-z, '-')");
  }
  std::string full = entry->base;
  full += entry->prefix;
  full += entry->join;
  full += local;
  return TermIri{entry->base, entry->prefix, std::string(local), std::move(full)};
}

/// Splits an IRI against the longest registered base that prefixes it, then
/// matches a registered prefix and its join character.
inline IriParts parse_iri(const PrefixRegistry& registry, std::string_view full) {
  std::size_t best = 0;
  bool matched = false;
  for (const auto& e : registry.entries()) {
    if (full.starts_with(e.base) && (!matched || e.base.size() > best)) {
      best = e.base.size();
      matched = true;
    }
  }
  if (!matched) throw registry_error("no registered base URI matches '" + std::string(full) + "'");

  const std::string_view rest = full.substr(best);
  bool any_join = false;
  for (const auto& e : registry.entries()) {
    if (e.base.size() != best || !full.starts_with(e.base)) continue;
    if (rest.find(e.join) != std::string_view::npos) any_join = true;
    if (rest.size() > e.prefix.size() && rest.starts_with(e.prefix) && rest[e.prefix.size()] == e.join) {
      std::string local(rest.substr(e.prefix.size() + 1));
      if (local.empty()) throw parse_error(std::string(full), full.size(), "empty local identifier");
      auto cls = classify_local(local);
      return IriParts{e.prefix, std::move(local), cls};
    }
  }
  if (!any_join)
    throw parse_error(std::string(full), full.size(), "missing separator between prefix and local identifier");
  throw registry_error("'" + std::string(full) + "' does not name a registered prefix under base '" +
                       std::string(full.substr(0, best)) + "'");
}

}  // namespace quintid
