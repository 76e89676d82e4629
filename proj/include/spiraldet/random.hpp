#pragma once

#include <array>
#include <cstdint>

#include "spiraldet/exponent.hpp"
#include "spiraldet/rational.hpp"

namespace spiraldet {

/// SplitMix64. Streams are derived from (seed, counter) so each trial draws
/// from its own generator and results do not depend on evaluation order.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  SplitMix64(std::uint64_t seed, std::uint64_t stream) noexcept
      : state_(seed ^ mix(stream + 0x632be59bd9b4e019ULL)) {}

  std::uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) noexcept {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  /// Uniform over [-bound, bound] without 0.
  std::int64_t nonzero(std::int64_t bound) noexcept {
    const std::int64_t r = uniform(0, 2 * bound - 1);
    return r < bound ? r - bound : r - bound + 1;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Nonzero rational p/q with |p| <= num_bound, 1 <= q <= den_bound.
  Rational nonzero_rational(std::int64_t num_bound = 50,
                            std::int64_t den_bound = 9) {
    Rational r(static_cast<long>(nonzero(num_bound)),
               static_cast<unsigned long>(uniform(1, den_bound)));
    r.canonicalize();
    return r;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace spiraldet
