#pragma once

// Proquint codec: unsigned 16/32/64-bit values <-> pronounceable strings.
//
//   quint        := C V C V C
//   proquint(w)  := quint ("-" quint){w/16 - 1}
//   C in {b d f g h j k l m n p r s t v z}, V in {a i o u}
//
// Groups are written most significant first, and each group consumes its
// 16 bits most significant first in the pattern 4-2-4-2-4.

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

#include "quintid/alphabet.hpp"
#include "quintid/error.hpp"

namespace quintid {

enum class Width : unsigned { w16 = 16, w32 = 32, w64 = 64 };

constexpr unsigned bits(Width w) noexcept { return static_cast<unsigned>(w); }
constexpr std::size_t group_count(Width w) noexcept { return bits(w) / 16; }

/// Length of the canonical text: five letters per group plus separators.
constexpr std::size_t text_length(Width w) noexcept {
  return 5 * group_count(w) + group_count(w) - 1;
}

constexpr std::uint64_t max_value(Width w) noexcept {
  return w == Width::w64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits(w)) - 1;
}

inline Width width_from_bits(unsigned b) {
  switch (b) {
    case 16: return Width::w16;
    case 32: return Width::w32;
    case 64: return Width::w64;
    default: throw domain_error("unsupported width " + std::to_string(b) + " (expected 16, 32 or 64)");
  }
}

/// 1 -> 16, 2 -> 32, 4 -> 64; any other group count has no width.
constexpr std::optional<Width> width_from_groups(std::size_t groups) noexcept {
  switch (groups) {
    case 1: return Width::w16;
    case 2: return Width::w32;
    case 4: return Width::w64;
    default: return std::nullopt;
  }
}

/// A canonical proquint together with the value and width it encodes.
/// Instances are only produced by `encode`, `parse` and `canonicalize`, so the
/// three fields always agree.
class Proquint {
 public:
  const std::string& text() const noexcept { return text_; }
  Width width() const noexcept { return width_; }
  std::uint64_t value() const noexcept { return value_; }

  friend bool operator==(const Proquint& a, const Proquint& b) noexcept {
    return a.width_ == b.width_ && a.value_ == b.value_;
  }
  // Within one width this is also the byte order of `text()`.
  friend std::strong_ordering operator<=>(const Proquint& a, const Proquint& b) noexcept {
    if (auto c = bits(a.width_) <=> bits(b.width_); c != 0) return c;
    return a.value_ <=> b.value_;
  }

 private:
  Proquint(std::string text, Width width, std::uint64_t value)
      : text_(std::move(text)), width_(width), value_(value) {}

  friend Proquint encode(std::uint64_t value, Width width);

  std::string text_;
  Width width_;
  std::uint64_t value_;
};

namespace detail {

inline void append_group(std::string& out, std::uint16_t g) {
  out += alphabet::consonants[(g >> 12) & 0xF];
  out += alphabet::vowels[(g >> 10) & 0x3];
  out += alphabet::consonants[(g >> 6) & 0xF];
  out += alphabet::vowels[(g >> 4) & 0x3];
  out += alphabet::consonants[g & 0xF];
}

// Slot kind of letter `k` (0..4) within a group.
constexpr bool is_consonant_slot(std::size_t k) noexcept { return k % 2 == 0; }

inline std::string describe(char c) {
  if (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7F) {
    static constexpr char hex[] = "0123456789abcdef";
    auto u = static_cast<unsigned char>(c);
    return std::string("byte 0x") + hex[u >> 4] + hex[u & 0xF];
  }
  return std::string("'") + c + "'";
}

/// Folds one letter into `acc`, or throws naming the slot the letter was in.
inline void accumulate_letter(std::uint64_t& acc, char c, std::size_t slot, std::string_view input,
                              std::size_t position) {
  if (is_consonant_slot(slot)) {
    auto v = alphabet::consonant_value(c);
    if (!v) {
      const char* why = alphabet::is_vowel(c) ? "vowel in consonant slot" : "not a proquint consonant";
      throw parse_error(std::string(input), position, describe(c) + ": " + why);
    }
    acc = (acc << 4) | *v;
  } else {
    auto v = alphabet::vowel_value(c);
    if (!v) {
      const char* why = alphabet::is_consonant(c) ? "consonant in vowel slot" : "not a proquint vowel";
      throw parse_error(std::string(input), position, describe(c) + ": " + why);
    }
    acc = (acc << 2) | *v;
  }
}

}  // namespace detail

/// Canonical proquint of `value`. Throws range_error when value >= 2^width.
inline Proquint encode(std::uint64_t value, Width width) {
  if (value > max_value(width))
    throw range_error("value " + std::to_string(value) + " does not fit in " +
                      std::to_string(bits(width)) + " bits");
  std::string text;
  text.reserve(text_length(width));
  for (std::size_t g = group_count(width); g-- > 0;) {
    detail::append_group(text, static_cast<std::uint16_t>(value >> (16 * g)));
    if (g != 0) text += alphabet::separator;
  }
  return Proquint(std::move(text), width, value);
}

/// Signed values encode their two's-complement bit pattern at the width of T,
/// so INT32_MIN becomes "mabab-babab".
template <std::integral T>
  requires(!std::same_as<T, bool> && (sizeof(T) == 2 || sizeof(T) == 4 || sizeof(T) == 8))
Proquint encode(T value) {
  using U = std::make_unsigned_t<T>;
  return encode(static_cast<std::uint64_t>(static_cast<U>(value)), width_from_bits(8 * sizeof(T)));
}

/// Strict decode: `text` must be exactly the canonical form for `width`.
/// Throws parse_error naming the first offending position.
inline std::uint64_t decode(std::string_view text, Width width) {
  const std::size_t expected = text_length(width);
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < expected; ++i) {
    if (i >= text.size())
      throw parse_error(std::string(text), i,
                        "unexpected end of input (a " + std::to_string(bits(width)) +
                            "-bit proquint has " + std::to_string(group_count(width)) + " groups)");
    const char c = text[i];
    const std::size_t slot = i % 6;
    if (slot == 5) {
      if (c != alphabet::separator)
        throw parse_error(std::string(text), i, "expected '-' between groups, found " + detail::describe(c));
      continue;
    }
    detail::accumulate_letter(acc, c, slot, text, i);
  }
  if (text.size() > expected)
    throw parse_error(std::string(text), expected,
                      "trailing input after " + std::to_string(group_count(width)) + " groups");
  return acc;
}

/// Strict decode into T, reinterpreting the bit pattern for signed T.
template <std::integral T>
  requires(!std::same_as<T, bool> && (sizeof(T) == 2 || sizeof(T) == 4 || sizeof(T) == 8))
T decode_as(std::string_view text) {
  using U = std::make_unsigned_t<T>;
  return static_cast<T>(static_cast<U>(decode(text, width_from_bits(8 * sizeof(T)))));
}

/// Strict parse returning the validated Proquint.
inline Proquint parse(std::string_view text, Width width) { return encode(decode(text, width), width); }

/// Lenient parse. Letters may be any ASCII case; runs of hyphens are accepted
/// between groups and may be omitted entirely. Hyphens inside a group or at
/// either end are still errors, as is anything other than letters and hyphens.
inline Proquint canonicalize(std::string_view text, Width width) {
  const std::size_t wanted = 5 * group_count(width);
  std::size_t letters = 0;
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == alphabet::separator) {
      if (letters == 0) throw parse_error(std::string(text), i, "leading '-'");
      if (letters % 5 != 0) throw parse_error(std::string(text), i, "'-' inside a group");
      if (i + 1 == text.size()) throw parse_error(std::string(text), i, "trailing '-'");
      continue;
    }
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (letters == wanted)
      throw parse_error(std::string(text), i,
                        "too many letters for a " + std::to_string(bits(width)) + "-bit proquint");
    detail::accumulate_letter(acc, c, letters % 5, text, i);
    ++letters;
  }
  if (letters != wanted)
    throw parse_error(std::string(text), text.size(),
                      "expected " + std::to_string(wanted) + " letters, found " + std::to_string(letters));
  return encode(acc, width);
}

}  // namespace quintid
