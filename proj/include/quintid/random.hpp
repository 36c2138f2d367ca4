#pragma once

// Uniform bit sources for coining identifiers.
//
// Seeded mode runs std::mt19937_64 constructed from the 64-bit seed. Its
// output sequence is fixed by the C++ standard, so a seed reproduces the same
// identifiers on every conforming implementation. A w-bit draw is the top w
// bits of one engine output. Golden tests pin these outputs; changing either
// rule is a breaking change.
//
// Entropy mode reads 64 bits per draw from std::random_device.

#include <cstdint>
#include <exception>
#include <memory>
#include <random>
#include <string>
#include <variant>

#include "quintid/codec.hpp"
#include "quintid/error.hpp"

namespace quintid {

/// Not thread-safe: use one source per thread or serialize access.
class RandomSource {
 public:
  static RandomSource seeded(std::uint64_t seed) { return RandomSource(std::mt19937_64(seed)); }

  static RandomSource entropy() {
    try {
      return RandomSource(std::make_unique<std::random_device>());
    } catch (const std::exception& e) {
      throw environment_error(std::string("entropy source unavailable: ") + e.what());
    }
  }

  bool is_seeded() const noexcept { return std::holds_alternative<std::mt19937_64>(engine_); }

  /// Uniform value in [0, 2^width).
  std::uint64_t next(Width width) {
    const unsigned shift = 64 - bits(width);
    return next64() >> shift;
  }

  std::uint64_t next64() {
    if (auto* mt = std::get_if<std::mt19937_64>(&engine_)) return (*mt)();
    auto& device = *std::get<std::unique_ptr<std::random_device>>(engine_);
    try {
      static_assert(sizeof(std::random_device::result_type) == 4);
      const std::uint64_t hi = device();
      const std::uint64_t lo = device();
      return (hi << 32) | lo;
    } catch (const std::exception& e) {
      throw environment_error(std::string("entropy source failed: ") + e.what());
    }
  }

 private:
  using Engine = std::variant<std::mt19937_64, std::unique_ptr<std::random_device>>;
  explicit RandomSource(Engine engine) : engine_(std::move(engine)) {}

  Engine engine_;
};

}  // namespace quintid
