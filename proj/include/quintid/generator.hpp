#pragma once

// Coordination-free coinage of random identifiers, plus birthday-problem
// arithmetic for choosing a space large enough to make collisions negligible.
//
// Check digits are derived from the random value, so a checked space has the
// same number of coinable identifiers as the unchecked one. Collision math
// always uses 2^width.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "quintid/checksum.hpp"
#include "quintid/codec.hpp"
#include "quintid/error.hpp"
#include "quintid/random.hpp"

namespace quintid {

/// Size of an identifier space, N >= 1. Holds counts up to 2^64 exactly.
class Cardinality {
 public:
  explicit Cardinality(std::uint64_t count) : exact_(count), value_(static_cast<long double>(count)) {
    if (count == 0) throw domain_error("cardinality must be at least 1");
  }

  /// 2^b for 0 <= b <= 64.
  static Cardinality power_of_two(unsigned b) {
    if (b > 64) throw domain_error("space of 2^" + std::to_string(b) + " exceeds the 64-bit ceiling");
    if (b == 64) return Cardinality(TwoTo64{});
    return Cardinality(std::uint64_t{1} << b);
  }

  long double value() const noexcept { return value_; }

  /// True when `n` draws must contain a duplicate (n > N).
  bool exceeded_by(std::uint64_t n) const noexcept { return exact_ ? n > *exact_ : false; }

  /// N as an integer, or nullopt for 2^64.
  std::optional<std::uint64_t> exact() const noexcept { return exact_; }

 private:
  struct TwoTo64 {};
  explicit Cardinality(TwoTo64) : value_(std::ldexp(1.0L, 64)) {}

  std::optional<std::uint64_t> exact_;
  long double value_;
};

struct IdSpace {
  Width width = Width::w32;
  bool checked = false;

  Cardinality cardinality() const { return Cardinality::power_of_two(bits(width)); }

  /// The 16-bit space collides quickly under random coinage; callers should
  /// surface a warning when coining in it.
  bool is_short() const noexcept { return width == Width::w16; }
};

inline Proquint coin(const IdSpace& space, RandomSource& source) {
  return encode(source.next(space.width), space.width);
}

inline CheckedId coin_checked(const IdSpace& space, RandomSource& source) {
  return attach_check(coin(space, source));
}

/// `count` coinages with duplicates within this batch redrawn. This is only a
/// local courtesy; it says nothing about identifiers coined elsewhere.
/// Throws domain_error when the space cannot hold `count` distinct values.
inline std::vector<Proquint> coin_batch(const IdSpace& space, RandomSource& source, std::uint64_t count) {
  if (space.cardinality().exceeded_by(count))
    throw domain_error("cannot coin " + std::to_string(count) + " distinct identifiers in a " +
                       std::to_string(bits(space.width)) + "-bit space");
  std::vector<Proquint> out;
  out.reserve(count);
  std::unordered_set<std::uint64_t> seen;
  while (out.size() < count) {
    auto p = coin(space, source);
    if (seen.insert(p.value()).second) out.push_back(std::move(p));
  }
  return out;
}

namespace detail {

// Below this many draws the product is summed term by term.
inline constexpr std::uint64_t kDirectSumLimit = std::uint64_t{1} << 20;

// log of prod_{i<n} (1 - i/N).
inline long double log_no_collision(std::uint64_t n, long double N) {
  if (n <= kDirectSumLimit) {
    long double acc = 0.0L;
    for (std::uint64_t i = 1; i < n; ++i) acc += std::log1p(-static_cast<long double>(i) / N);
    return acc;
  }
  // Large n. Since log(1 - x) <= -x, the product is below exp(-n(n-1)/2N);
  // past 60 that is under 1e-26 and the probability rounds to 1.
  const long double m = static_cast<long double>(n - 1);
  const long double s1 = m * (m + 1) / 2;
  if (s1 / N > 60.0L) return -s1 / N;
  // Otherwise n/N < 120/n < 2^-13 and the series -sum_k S_k / (k N^k), with
  // S_k = sum_{i<n} i^k, converges fast enough that five terms suffice.
  const long double s2 = m * (m + 1) * (2 * m + 1) / 6;
  const long double s3 = s1 * s1;
  const long double s4 = m * (m + 1) * (2 * m + 1) * (3 * m * m + 3 * m - 1) / 30;
  const long double s5 = m * m * (m + 1) * (m + 1) * (2 * m * m + 2 * m - 1) / 12;
  const long double r = 1.0L / N;
  return -(s1 * r + s2 * r * r / 2 + s3 * r * r * r / 3 + s4 * r * r * r * r / 4 +
           s5 * r * r * r * r * r / 5);
}

}  // namespace detail

/// Probability that `draws` uniform samples from `space` contain a duplicate:
/// 1 - prod_{i<n} (1 - i/N). Exactly 1 when draws > N.
inline double collision_probability(std::uint64_t draws, const Cardinality& space) {
  if (draws <= 1) return 0.0;
  if (space.exceeded_by(draws)) return 1.0;
  const long double p = -std::expm1(detail::log_no_collision(draws, space.value()));
  return static_cast<double>(std::clamp(p, 0.0L, 1.0L));
}

inline double collision_probability(std::uint64_t draws, std::uint64_t cardinality) {
  return collision_probability(draws, Cardinality(cardinality));
}

/// Largest n with collision_probability(n, N) <= max_probability.
/// Requires 0 < max_probability < 1.
inline std::uint64_t draws_for_risk(double max_probability, const Cardinality& space) {
  if (!(max_probability > 0.0 && max_probability < 1.0))
    throw domain_error("risk threshold must lie strictly between 0 and 1");
  // P(n) >= 1 - exp(-n(n-1)/2N), so any n with n(n-1) > 2N*L fails.
  const long double L = -std::log1p(-static_cast<long double>(max_probability));
  const long double root = std::floor(std::sqrt(2.0L * space.value() * L));
  std::uint64_t hi = root >= 1.8e19L ? std::numeric_limits<std::uint64_t>::max()
                                     : static_cast<std::uint64_t>(root) + 2;
  if (auto n = space.exact(); n && *n < hi) hi = *n + 1;
  // Invariant: P(lo) <= p < P(hi).
  std::uint64_t lo = 1;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (collision_probability(mid, space) <= max_probability)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

inline std::uint64_t draws_for_risk(double max_probability, std::uint64_t cardinality) {
  return draws_for_risk(max_probability, Cardinality(cardinality));
}

}  // namespace quintid
