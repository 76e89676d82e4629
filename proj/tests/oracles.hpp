#pragma once

// Reference implementations that share no code path with the library's
// determinant engines or funceq sampler.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "spiraldet/matrix.hpp"

namespace oracle {

/// Leibniz formula: sum over all permutations. Only for n <= 7.
template <class Ring>
Ring leibniz_det(const spiraldet::SquareMatrix<Ring>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Ring total(0L);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (perm[i] > perm[j]) ++inversions;
      }
    }
    Ring term(inversions % 2 == 0 ? 1L : -1L);
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline double g_power(double alpha, double x) {
  return std::pow(x, alpha) + std::pow(x, -alpha);
}

}  // namespace oracle
