#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace quintid::alphabet {

// Index is the encoded value: four bits per consonant, two bits per vowel.
// Both tables ascend in character code, which is what makes encodings sort
// in numeric order.
inline constexpr std::array<char, 16> consonants = {'b', 'd', 'f', 'g', 'h', 'j', 'k', 'l',
                                                    'm', 'n', 'p', 'r', 's', 't', 'v', 'z'};
inline constexpr std::array<char, 4> vowels = {'a', 'i', 'o', 'u'};

inline constexpr char separator = '-';

namespace detail {

inline constexpr std::int8_t kNone = -1;

template <std::size_t N>
constexpr std::array<std::int8_t, 256> invert(const std::array<char, N>& table) {
  std::array<std::int8_t, 256> inverse{};
  for (auto& slot : inverse) slot = kNone;
  for (std::size_t i = 0; i < N; ++i)
    inverse[static_cast<unsigned char>(table[i])] = static_cast<std::int8_t>(i);
  return inverse;
}

inline constexpr auto consonant_index = invert(consonants);
inline constexpr auto vowel_index = invert(vowels);

}  // namespace detail

/// 4-bit value of `c`, or nullopt when `c` is not a consonant of the alphabet.
constexpr std::optional<std::uint8_t> consonant_value(char c) noexcept {
  auto v = detail::consonant_index[static_cast<unsigned char>(c)];
  if (v == detail::kNone) return std::nullopt;
  return static_cast<std::uint8_t>(v);
}

/// 2-bit value of `c`, or nullopt when `c` is not a vowel of the alphabet.
constexpr std::optional<std::uint8_t> vowel_value(char c) noexcept {
  auto v = detail::vowel_index[static_cast<unsigned char>(c)];
  if (v == detail::kNone) return std::nullopt;
  return static_cast<std::uint8_t>(v);
}

constexpr bool is_consonant(char c) noexcept { return consonant_value(c).has_value(); }
constexpr bool is_vowel(char c) noexcept { return vowel_value(c).has_value(); }

}  // namespace quintid::alphabet
