#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "spiraldet/errors.hpp"
#include "spiraldet/laurent.hpp"
#include "spiraldet/matrix.hpp"
#include "spiraldet/rational.hpp"

namespace spiraldet {

inline constexpr std::size_t kCofactorGuard = 8;

enum class SizeOverride { Enforce, Allow };

namespace detail {
inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }
inline bool is_zero(const Rational& r) { return r == 0; }
inline bool is_zero(const BigInt& z) { return z == 0; }
}  // namespace detail

/// Laplace expansion along successive rows, memoised over column subsets:
/// table[mask] holds the minor on the first popcount(mask) rows and the
/// columns in mask. Works over any commutative ring with +, -, * and 0/1.
template <class Ring>
Ring det_cofactor(const SquareMatrix<Ring>& m,
                  SizeOverride guard = SizeOverride::Enforce) {
  const std::size_t n = m.size();
  if (guard == SizeOverride::Enforce && n > kCofactorGuard) {
    throw SizeGuard("cofactor determinant limited to n <= " +
                    std::to_string(kCofactorGuard) + " (got " +
                    std::to_string(n) + ")");
  }
  if (n > 24) throw SizeGuard("cofactor determinant cannot exceed n = 24");
  if (n == 0) return Ring(1L);

  const std::uint32_t full = (1U << n) - 1U;
  std::vector<Ring> table(std::size_t{full} + 1);
  table[0] = Ring(1L);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
    Ring acc(0L);
    std::size_t pos = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1U << j))) continue;
      const Ring& entry = m(row, j);
      const Ring& minor = table[mask & ~(1U << j)];
      if (!detail::is_zero(entry) && !detail::is_zero(minor)) {
        Ring prod = entry * minor;
        if ((row + pos) % 2 == 0) {
          acc += prod;
        } else {
          acc -= prod;
        }
      }
      ++pos;
    }
    table[mask] = std::move(acc);
  }
  return table[full];
}

/// Fraction-free (Bareiss) elimination. Rows are first scaled to integers,
/// then every division in the elimination is exact.
inline Rational det_bareiss_rational(const SquareMatrix<Rational>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);

  SquareMatrix<BigInt> a(n);
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt lcm = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = m(i, j).get_num() * (lcm / m(i, j).get_den());
    }
    scale *= lcm;
  }

  int sign = 1;
  BigInt prev = 1;
  BigInt t;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return Rational(0);
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  Rational det(a(n - 1, n - 1) * sign, scale);
  det.canonicalize();
  return det;
}

}  // namespace spiraldet
