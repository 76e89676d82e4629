#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "spiraldet/errors.hpp"
#include "spiraldet/laurent.hpp"
#include "spiraldet/matrix.hpp"

namespace spiraldet {

/// det = sign * corner_factor * prod(antidiagonal_factors).
struct WedgeFactorization {
  LaurentPoly corner_factor;
  std::vector<LaurentPoly> antidiagonal_factors;
  int sign = 1;

  LaurentPoly product() const {
    LaurentPoly p = corner_factor;
    for (const auto& f : antidiagonal_factors) p *= f;
    return sign < 0 ? -p : p;
  }
};

struct WedgeResult {
  SquareMatrix<LaurentPoly> transformed;
  WedgeFactorization factorization;
};

namespace detail {

inline void require_zero(const SquareMatrix<LaurentPoly>& m, std::size_t row1,
                         std::size_t col_from1, std::size_t col_to1) {
  for (std::size_t j = col_from1; j <= col_to1; ++j) {
    if (!m(row1 - 1, j - 1).is_zero()) throw WedgeNotZero(row1 - 1, j - 1);
  }
}

inline LaurentPoly angle_x() { return angle(ExponentVector::of(Var::x)); }

}  // namespace detail

/// Even size 2n. Replaces C_j by C_j - <x> C_{j-1} + C_{j-2} for j = 3..2n
/// (all on the original columns), checks that the upper and lower wedges
/// vanish and reads off the corner 2x2 determinant and the antidiagonal.
inline WedgeResult wedge_eliminate_even(const SquareMatrix<LaurentPoly>& z) {
  const std::size_t size = z.size();
  if (size == 0 || size % 2 != 0) {
    throw DomainError("wedge_eliminate_even needs a positive even size");
  }
  const std::size_t n = size / 2;
  const LaurentPoly ax = detail::angle_x();

  SquareMatrix<LaurentPoly> t = z;
  for (std::size_t j = 2; j < size; ++j) {
    for (std::size_t i = 0; i < size; ++i) {
      t(i, j) = z(i, j) - ax * z(i, j - 1) + z(i, j - 2);
    }
  }

  // 1-based bounds below follow the picture of the eliminated matrix.
  for (std::size_t r = 1; r <= n; ++r) {
    detail::require_zero(t, r, std::max<std::size_t>(3, r + 1), size - r + 1);
  }
  for (std::size_t r = n + 1; r <= size; ++r) {
    detail::require_zero(t, r, std::max<std::size_t>(3, size - r + 3), r);
  }

  WedgeFactorization f;
  f.corner_factor = z(0, 0) * z(size - 1, 1) - z(0, 1) * z(size - 1, 0);
  for (std::size_t i = 2; i <= size - 1; ++i) {
    f.antidiagonal_factors.push_back(t(i - 1, size - i + 1));
  }
  f.sign = (n - 1) % 2 == 0 ? 1 : -1;
  return {std::move(t), std::move(f)};
}

/// Odd size 2n+1. Replaces C_j by C_j - <x> C_{j+1} + C_{j+2} for
/// j = 1..2n-1; the last two columns stay untouched and carry the corner.
inline WedgeResult wedge_eliminate_odd(const SquareMatrix<LaurentPoly>& z) {
  const std::size_t size = z.size();
  if (size % 2 != 1) {
    throw DomainError("wedge_eliminate_odd needs an odd size");
  }
  const std::size_t n = size / 2;
  if (n == 0) {
    WedgeFactorization f;
    f.corner_factor = z(0, 0);
    return {z, std::move(f)};
  }
  const LaurentPoly ax = detail::angle_x();

  SquareMatrix<LaurentPoly> t = z;
  for (std::size_t j = 0; j + 2 < size; ++j) {
    for (std::size_t i = 0; i < size; ++i) {
      t(i, j) = z(i, j) - ax * z(i, j + 1) + z(i, j + 2);
    }
  }

  for (std::size_t r = 1; r <= n; ++r) {
    detail::require_zero(t, r, r, 2 * n - r);
  }
  for (std::size_t r = n + 2; r <= 2 * n; ++r) {
    detail::require_zero(t, r, 2 * n + 2 - r, r - 1);
  }
  detail::require_zero(t, size, 1, 2 * n - 1);

  WedgeFactorization f;
  const std::size_t last = size - 1;
  f.corner_factor =
      z(0, last - 1) * z(last, last) - z(0, last) * z(last, last - 1);
  for (std::size_t i = 2; i <= 2 * n; ++i) {
    f.antidiagonal_factors.push_back(t(i - 1, 2 * n - i));
  }
  f.sign = n % 2 == 0 ? 1 : -1;
  return {std::move(t), std::move(f)};
}

/// Dispatches on the parity of the size.
inline WedgeResult wedge_eliminate(const SquareMatrix<LaurentPoly>& z) {
  return z.size() % 2 == 0 ? wedge_eliminate_even(z) : wedge_eliminate_odd(z);
}

/// Closed forms of the eliminated antidiagonal entries of Z_{2n} (y = x).
/// With i = n - k + 1, `first` is z'_{i,2n-i+2} and `second` is
/// z'_{2n-i+1,i+1}.
struct AntidiagonalPair {
  LaurentPoly first;
  LaurentPoly second;
};

inline AntidiagonalPair antidiagonal_entry_formulas(std::int64_t n,
                                                    std::int64_t k) {
  if (k < 1 || k > n - 1) {
    throw IndexOutOfRange("antidiagonal formulas need 1 <= k <= n-1");
  }
  // [(bc)^k x^(2k+1)] <a b^(k(k+1)) c^(k^2) x^(k(2k+1))>
  LaurentPoly first =
      bracket(ExponentVector::integral(0, k, k, 2 * k + 1, 0)) *
      angle(ExponentVector::integral(1, k * (k + 1), k * k, k * (2 * k + 1), 0));
  // [(bc)^((2k-1)/2) x^(2k)] <a b^((2k^2-2k+1)/2) c^((2k^2-1)/2) x^(k(2k-1))>
  LaurentPoly second =
      bracket(ExponentVector::halves(0, 2 * k - 1, 2 * k - 1, 4 * k, 0)) *
      angle(ExponentVector::halves(2, 2 * k * k - 2 * k + 1, 2 * k * k - 1,
                                   2 * k * (2 * k - 1), 0));
  return {std::move(first), std::move(second)};
}

}  // namespace spiraldet
