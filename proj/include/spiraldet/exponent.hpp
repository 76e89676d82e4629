#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace spiraldet {

/// The fixed, ordered variable set.
enum class Var : std::size_t { a = 0, b = 1, c = 2, x = 3, y = 4 };

inline constexpr std::size_t kNumVars = 5;
inline constexpr std::array<std::string_view, kNumVars> kVarNames = {
    "a", "b", "c", "x", "y"};

constexpr std::size_t index(Var v) noexcept {
  return static_cast<std::size_t>(v);
}

/// Exponents of a monomial in a, b, c, x, y, stored in half units: the true
/// exponent of variable i is doubled[i] / 2. Ordered lexicographically.
struct ExponentVector {
  std::array<std::int64_t, kNumVars> doubled{};

  static constexpr ExponentVector zero() noexcept { return {}; }

  /// Monomial with integer exponents.
  static constexpr ExponentVector integral(std::int64_t ea, std::int64_t eb,
                                           std::int64_t ec, std::int64_t ex,
                                           std::int64_t ey) noexcept {
    return {{2 * ea, 2 * eb, 2 * ec, 2 * ex, 2 * ey}};
  }

  /// Monomial given directly in half units.
  static constexpr ExponentVector halves(std::int64_t ha, std::int64_t hb,
                                         std::int64_t hc, std::int64_t hx,
                                         std::int64_t hy) noexcept {
    return {{ha, hb, hc, hx, hy}};
  }

  /// A single variable to an integer power.
  static constexpr ExponentVector of(Var v, std::int64_t power = 1) noexcept {
    ExponentVector e;
    e.doubled[index(v)] = 2 * power;
    return e;
  }

  constexpr std::int64_t operator[](Var v) const noexcept {
    return doubled[index(v)];
  }

  constexpr bool is_zero() const noexcept { return *this == zero(); }

  constexpr bool is_integral() const noexcept {
    for (auto d : doubled) {
      if (d % 2 != 0) return false;
    }
    return true;
  }

  constexpr ExponentVector operator+(const ExponentVector& o) const noexcept {
    ExponentVector r;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      r.doubled[i] = doubled[i] + o.doubled[i];
    }
    return r;
  }

  constexpr ExponentVector operator-(const ExponentVector& o) const noexcept {
    ExponentVector r;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      r.doubled[i] = doubled[i] - o.doubled[i];
    }
    return r;
  }

  constexpr ExponentVector operator-() const noexcept { return zero() - *this; }

  constexpr ExponentVector& operator+=(const ExponentVector& o) noexcept {
    return *this = *this + o;
  }

  /// Multiplies every exponent by an integer k (the k-th power).
  constexpr ExponentVector scaled(std::int64_t k) const noexcept {
    ExponentVector r;
    for (std::size_t i = 0; i < kNumVars; ++i) r.doubled[i] = k * doubled[i];
    return r;
  }

  friend constexpr auto operator<=>(const ExponentVector&,
                                    const ExponentVector&) = default;
};

}  // namespace spiraldet
