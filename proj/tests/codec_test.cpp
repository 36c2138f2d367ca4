#include <gtest/gtest.h>

#include <bitset>
#include <cstdint>
#include <random>
#include <set>
#include <string>

#include "quintid/codec.hpp"

namespace quintid {
namespace {

// Reference encoder working on the binary expansion as text: take the bits
// most significant first, five fields of 4-2-4-2-4 per 16-bit group.
std::string reference_encode(std::uint64_t value, unsigned width) {
  const std::string c = "bdfghjklmnprstvz";
  const std::string v = "aiou";
  const std::string binary = std::bitset<64>(value).to_string().substr(64 - width);
  std::string out;
  std::size_t pos = 0;
  for (unsigned g = 0; g < width / 16; ++g) {
    if (g) out += '-';
    for (int field : {4, 2, 4, 2, 4}) {
      const auto idx = std::stoul(binary.substr(pos, field), nullptr, 2);
      out += field == 4 ? c[idx] : v[idx];
      pos += field;
    }
  }
  return out;
}

TEST(Alphabet, TablesAreDistinctAscendingAndInvertible) {
  std::set<char> all;
  for (std::size_t i = 0; i < alphabet::consonants.size(); ++i) {
    all.insert(alphabet::consonants[i]);
    EXPECT_EQ(alphabet::consonant_value(alphabet::consonants[i]), i);
    if (i) {
      EXPECT_LT(alphabet::consonants[i - 1], alphabet::consonants[i]);
    }
  }
  for (std::size_t i = 0; i < alphabet::vowels.size(); ++i) {
    all.insert(alphabet::vowels[i]);
    EXPECT_EQ(alphabet::vowel_value(alphabet::vowels[i]), i);
    if (i) {
      EXPECT_LT(alphabet::vowels[i - 1], alphabet::vowels[i]);
    }
  }
  EXPECT_EQ(all.size(), 20u);
  EXPECT_FALSE(all.contains(alphabet::separator));
  EXPECT_FALSE(alphabet::consonant_value('a'));
  EXPECT_FALSE(alphabet::vowel_value('b'));
  EXPECT_FALSE(alphabet::consonant_value('B'));
}

TEST(Encode, FigureValues) {
  EXPECT_EQ(encode(0, Width::w16).text(), "babab");
  EXPECT_EQ(encode(1, Width::w16).text(), "babad");
  EXPECT_EQ(encode(2, Width::w16).text(), "babaf");
  EXPECT_EQ(encode(0, Width::w32).text(), "babab-babab");
  EXPECT_EQ(encode(1, Width::w32).text(), "babab-babad");
  EXPECT_EQ(encode(2, Width::w32).text(), "babab-babaf");
  EXPECT_EQ(encode(3, Width::w32).text(), "babab-babag");
  EXPECT_EQ(encode(4, Width::w32).text(), "babab-babah");
  EXPECT_EQ(encode(5, Width::w32).text(), "babab-babaj");
  EXPECT_EQ(encode(10, Width::w32).text(), "babab-babap");
  EXPECT_EQ(encode(11, Width::w32).text(), "babab-babar");
  EXPECT_EQ(encode(0x80000000u, Width::w32).text(), "mabab-babab");
  EXPECT_EQ(encode(0x7FFFFFFFu, Width::w32).text(), "luzuz-zuzuz");
  EXPECT_EQ(encode(0, Width::w64).text(), "babab-babab-babab-babab");
  EXPECT_EQ(encode(1, Width::w64).text(), "babab-babab-babab-babad");
  EXPECT_EQ(encode(0x8000000000000000u, Width::w64).text(), "mabab-babab-babab-babab");
  EXPECT_EQ(encode(0x7FFFFFFFFFFFFFFFu, Width::w64).text(), "luzuz-zuzuz-zuzuz-zuzuz");
}

TEST(Encode, SignedValuesUseTwosComplement) {
  EXPECT_EQ(encode(INT32_MIN).text(), "mabab-babab");
  EXPECT_EQ(encode(INT32_MAX).text(), "luzuz-zuzuz");
  EXPECT_EQ(encode(INT64_MIN).text(), "mabab-babab-babab-babab");
  EXPECT_EQ(encode(INT64_MAX).text(), "luzuz-zuzuz-zuzuz-zuzuz");
  EXPECT_EQ(encode(std::int16_t{2}).text(), "babaf");
  EXPECT_EQ(encode(std::int16_t{-1}).text(), "zuzuz");
  EXPECT_EQ(encode(std::int16_t{-1}).value(), 0xFFFFu);
  EXPECT_EQ(decode_as<std::int32_t>("mabab-babab"), INT32_MIN);
  EXPECT_EQ(decode_as<std::int64_t>("luzuz-zuzuz-zuzuz-zuzuz"), INT64_MAX);
  EXPECT_EQ(decode_as<std::uint16_t>("babaf"), 2);
}

TEST(Encode, RangeErrors) {
  EXPECT_THROW(encode(0x10000, Width::w16), range_error);
  EXPECT_THROW(encode(0x100000000ull, Width::w32), range_error);
  EXPECT_NO_THROW(encode(0xFFFF, Width::w16));
  EXPECT_NO_THROW(encode(~0ull, Width::w64));
  EXPECT_THROW(width_from_bits(128), domain_error);
}

TEST(Encode, MatchesReferenceEncoder) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20000; ++i) {
    const auto v = rng();
    EXPECT_EQ(encode(v, Width::w64).text(), reference_encode(v, 64));
    EXPECT_EQ(encode(v >> 32, Width::w32).text(), reference_encode(v >> 32, 32));
    EXPECT_EQ(encode(v >> 48, Width::w16).text(), reference_encode(v >> 48, 16));
  }
}

TEST(Decode, Examples) {
  EXPECT_EQ(decode("babab-babar", Width::w32), 11u);
  EXPECT_EQ(decode("babab", Width::w16), 0u);
  EXPECT_EQ(decode("luzuz-zuzuz", Width::w32), 0x7FFFFFFFu);
  EXPECT_EQ(decode("zuzuz-zuzuz-zuzuz-zuzuz", Width::w64), ~0ull);
}

std::size_t error_position(std::string_view text, Width w) {
  try {
    decode(text, w);
  } catch (const parse_error& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error for " << text;
  return SIZE_MAX;
}

TEST(Decode, ErrorsNameThePosition) {
  EXPECT_EQ(error_position("bXbab", Width::w16), 1u);       // outside alphabet
  EXPECT_EQ(error_position("babab", Width::w32), 5u);       // too few groups
  EXPECT_EQ(error_position("babab-babab", Width::w16), 5u); // too many groups
  EXPECT_EQ(error_position("babab_babab", Width::w32), 5u); // wrong separator
  EXPECT_EQ(error_position("bbbab", Width::w16), 1u);       // consonant in vowel slot
  EXPECT_EQ(error_position("aabab", Width::w16), 0u);       // vowel in consonant slot
  EXPECT_EQ(error_position("BABAB", Width::w16), 0u);       // strict mode rejects upper case
  EXPECT_EQ(error_position("", Width::w16), 0u);
  EXPECT_EQ(error_position("babab-", Width::w32), 6u);
  EXPECT_EQ(error_position("babab--babab", Width::w32), 6u);
}

TEST(Decode, ErrorMessageNamesInput) {
  try {
    decode("bXbab", Width::w16);
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_NE(std::string(e.what()).find("bXbab"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("position 1"), std::string::npos);
    EXPECT_EQ(e.input(), "bXbab");
  }
}

TEST(Canonicalize, Examples) {
  EXPECT_EQ(canonicalize("BABAB-BABAP", Width::w32).text(), "babab-babap");
  EXPECT_EQ(canonicalize("bababbabap", Width::w32).text(), "babab-babap");
  EXPECT_EQ(canonicalize("babab--babap", Width::w32).text(), "babab-babap");
  EXPECT_EQ(canonicalize("LuZuZzUzUz", Width::w32).value(), 0x7FFFFFFFu);
}

TEST(Canonicalize, Rejections) {
  EXPECT_THROW(canonicalize("bab-ab", Width::w16), parse_error);
  EXPECT_THROW(canonicalize("-babab", Width::w16), parse_error);
  EXPECT_THROW(canonicalize("babab-", Width::w16), parse_error);
  EXPECT_THROW(canonicalize("babab babap", Width::w32), parse_error);
  EXPECT_THROW(canonicalize("babab", Width::w32), parse_error);
  EXPECT_THROW(canonicalize("bababbabap", Width::w16), parse_error);
  try {
    canonicalize("babab-bXbap", Width::w32);
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.position(), 7u);
  }
}

TEST(Canonicalize, IsIdempotent) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    auto text = encode(rng(), Width::w64).text();
    for (auto& c : text)
      if (rng() % 2) c = static_cast<char>(std::toupper(c));
    const auto once = canonicalize(text, Width::w64);
    EXPECT_EQ(canonicalize(once.text(), Width::w64).text(), once.text());
    EXPECT_EQ(once.text(), encode(once.value(), Width::w64).text());
  }
}

TEST(Codec, Exhaustive16BitRoundTripOrderAndInjectivity) {
  std::set<std::string> seen;
  std::string prev;
  for (std::uint32_t v = 0; v <= 0xFFFF; ++v) {
    const auto p = encode(v, Width::w16);
    ASSERT_EQ(p.text().size(), text_length(Width::w16));
    ASSERT_EQ(decode(p.text(), Width::w16), v);
    if (v) {
      ASSERT_LT(prev, p.text());
    }
    seen.insert(p.text());
    prev = p.text();
  }
  EXPECT_EQ(seen.size(), 65536u);
}

TEST(Codec, RandomRoundTripAndOrderAtWiderWidths) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100000; ++i) {
    const auto a = rng(), b = rng();
    for (Width w : {Width::w32, Width::w64}) {
      const auto x = a & max_value(w), y = b & max_value(w);
      const auto px = encode(x, w), py = encode(y, w);
      ASSERT_EQ(decode(px.text(), w), x);
      ASSERT_EQ(px.text().size(), text_length(w));
      ASSERT_EQ(x < y, px.text() < py.text());
      ASSERT_EQ(x < y, px < py);
    }
  }
}

TEST(Codec, ParseYieldsProquint) {
  const auto p = parse("babab-babap", Width::w32);
  EXPECT_EQ(p.value(), 10u);
  EXPECT_EQ(p.width(), Width::w32);
  EXPECT_EQ(p, encode(10, Width::w32));
}

}  // namespace
}  // namespace quintid
