#pragma once

// Damm check digits over decimal identifiers and over proquints.
//
// A proquint is checked through the decimal expansion of its value (no
// leading zeros). The check digit d is written as an extra group holding the
// single consonant alphabet::consonants[d], so digits 0..9 map to b..n:
//
//   babab-babap    (value 10, digits "10", check 1)  ->  babab-babap-d

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "quintid/alphabet.hpp"
#include "quintid/codec.hpp"
#include "quintid/error.hpp"

namespace quintid {

/// The order-10 totally antisymmetric quasigroup published with the Damm
/// algorithm. `quasigroup[interim][digit]` is the next interim digit.
inline constexpr std::array<std::array<std::uint8_t, 10>, 10> quasigroup = {{
    {0, 3, 1, 7, 5, 9, 8, 6, 4, 2},
    {7, 0, 9, 2, 1, 5, 4, 8, 6, 3},
    {4, 2, 0, 6, 8, 7, 1, 3, 5, 9},
    {1, 7, 5, 0, 9, 8, 3, 4, 2, 6},
    {6, 1, 2, 3, 0, 4, 5, 9, 7, 8},
    {3, 6, 7, 4, 2, 0, 9, 5, 8, 1},
    {5, 8, 6, 9, 7, 2, 0, 1, 3, 4},
    {8, 9, 4, 5, 3, 6, 2, 0, 1, 7},
    {9, 4, 3, 8, 6, 1, 7, 2, 0, 5},
    {2, 5, 8, 1, 4, 3, 6, 7, 9, 0},
}};

/// Left fold of `digits` through the quasigroup starting at interim 0.
/// Throws domain_error for an element above 9.
inline std::uint8_t damm_interim(std::span<const std::uint8_t> digits) {
  std::uint8_t interim = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] > 9)
      throw domain_error("element " + std::to_string(i) + " is " + std::to_string(digits[i]) +
                         ", not a decimal digit");
    interim = quasigroup[interim][digits[i]];
  }
  return interim;
}

/// Same fold over ASCII digits. Throws domain_error for any non-digit.
inline std::uint8_t damm_interim(std::string_view digits) {
  std::uint8_t interim = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char c = digits[i];
    if (c < '0' || c > '9')
      throw domain_error("character " + std::to_string(i) + " of '" + std::string(digits) +
                         "' is not a decimal digit");
    interim = quasigroup[interim][static_cast<std::uint8_t>(c - '0')];
  }
  return interim;
}

/// The digit that, appended to `digits`, makes the interim zero. The zero
/// diagonal of the quasigroup means this is the interim itself.
inline std::uint8_t check_digit(std::span<const std::uint8_t> digits) { return damm_interim(digits); }
inline std::uint8_t check_digit(std::string_view digits) { return damm_interim(digits); }

/// True iff the last digit of `text` is the check digit of the ones before it.
/// Empty or non-digit input is a parse_error, never `false`.
inline bool validate_number(std::string_view text) {
  if (text.empty()) throw parse_error("", 0, "empty identifier");
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw parse_error(std::string(text), i, detail::describe(text[i]) + " is not a decimal digit");
  return damm_interim(text) == 0;
}

/// Consonant that renders check digit `d` in a checked proquint.
constexpr char check_symbol(std::uint8_t d) noexcept { return alphabet::consonants[d]; }

/// Inverse of check_symbol; nullopt for letters that never render a check digit.
constexpr std::optional<std::uint8_t> check_symbol_value(char c) noexcept {
  auto v = alphabet::consonant_value(c);
  if (!v || *v > 9) return std::nullopt;
  return v;
}

/// Decimal expansion of `value` with no leading zeros ("0" for zero).
inline std::string decimal_digits(std::uint64_t value) {
  std::array<char, 20> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

/// An identifier carrying its Damm check digit.
struct CheckedId {
  std::string body;            // decimal digits, or canonical proquint text
  std::optional<Width> width;  // set for proquints only
  std::uint8_t check = 0;
  std::string text;            // serialized checked form

  bool is_proquint() const noexcept { return width.has_value(); }
  friend bool operator==(const CheckedId&, const CheckedId&) = default;
};

inline CheckedId attach_check(const Proquint& p) {
  const auto d = check_digit(decimal_digits(p.value()));
  std::string text = p.text();
  text += alphabet::separator;
  text += check_symbol(d);
  return CheckedId{p.text(), p.width(), d, std::move(text)};
}

/// Checked decimal form: the digits followed by their check digit.
inline CheckedId attach_check_number(std::string_view digits) {
  if (digits.empty()) throw parse_error("", 0, "empty identifier");
  for (std::size_t i = 0; i < digits.size(); ++i)
    if (digits[i] < '0' || digits[i] > '9')
      throw parse_error(std::string(digits), i, detail::describe(digits[i]) + " is not a decimal digit");
  const auto d = check_digit(digits);
  std::string text(digits);
  text += static_cast<char>('0' + d);
  return CheckedId{std::string(digits), std::nullopt, d, std::move(text)};
}

/// Splits a checked proquint into its body and carried check digit without
/// judging whether the digit is right. Throws parse_error on any structural
/// problem, including a check letter outside b..n.
inline CheckedId parse_checked(std::string_view text, Width width) {
  const std::size_t body_len = text_length(width);
  if (text.size() < body_len + 2) {
    if (text.size() == body_len)
      throw parse_error(std::string(text), text.size(), "missing check group");
    // Let the strict decoder name the position when the body itself is short.
    decode(text.substr(0, std::min(text.size(), body_len)), width);
    throw parse_error(std::string(text), text.size(), "missing check group");
  }
  const auto body = text.substr(0, body_len);
  decode(body, width);
  if (text[body_len] != alphabet::separator)
    throw parse_error(std::string(text), body_len,
                      "expected '-' before the check letter, found " + detail::describe(text[body_len]));
  if (text.size() > body_len + 2)
    throw parse_error(std::string(text), body_len + 2, "check group must be a single letter");
  const char symbol = text[body_len + 1];
  auto d = check_symbol_value(symbol);
  if (!d)
    throw parse_error(std::string(text), body_len + 1,
                      detail::describe(symbol) + " is not a check letter (expected one of b d f g h j k l m n)");
  return CheckedId{std::string(body), width, *d, std::string(text)};
}

/// True iff the check letter of `text` matches the check digit of its value.
/// A structurally malformed input is a parse_error, never `false`.
inline bool verify_checked(std::string_view text, Width width) {
  const CheckedId id = parse_checked(text, width);
  return check_digit(decimal_digits(decode(id.body, width))) == id.check;
}

}  // namespace quintid
