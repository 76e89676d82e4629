#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "spiraldet/closed_forms.hpp"
#include "spiraldet/determinant.hpp"
#include "spiraldet/laurent.hpp"
#include "spiraldet/random.hpp"
#include "spiraldet/spiral.hpp"
#include "spiraldet/verify.hpp"

namespace spiraldet {

/// numerator / denominator, evaluated only at numeric points.
struct RationalFunction {
  LaurentPoly numerator;
  LaurentPoly denominator = LaurentPoly(1L);

  Rational evaluate(const EvalPoint& pt) const {
    const Rational d = spiraldet::evaluate(denominator, pt);
    if (d == 0) throw DomainError("rational function pole at sample point");
    return spiraldet::evaluate(numerator, pt) / d;
  }
};

/// One step of the induction for the additive spiral:
///   det M_size(a,b,c,x,y) = scalar_factor * det M_{size-1}(A,B,C,x,y).
/// All polynomials use the additive reading of the variables.
struct ReductionData {
  std::size_t size = 0;  // 2n+1 for the odd step, 2n for the even step
  RationalFunction centre;   // A
  LaurentPoly up;            // B
  LaurentPoly down;          // C
  LaurentPoly scalar_factor; // c (odd) or -b (even)
  LaurentPoly difference;    // D_1 or D_2
  /// Odd step: E_1..E_7 of the bordered picture. Even step: the single
  /// entry multiplied against D_2 (centre row, last column).
  std::vector<LaurentPoly> border;
};

inline ReductionData reduce_odd(std::int64_t n) {
  if (n < 1) throw DomainError("reduce_odd needs n >= 1");
  using detail::linear;
  const std::int64_t n2 = n * n;
  ReductionData r;
  r.size = static_cast<std::size_t>(2 * n + 1);
  r.difference = linear(0, 2 * n - 1, 2 * n, 2 * n, 2 * n);
  r.border = {
      linear(1, n2, n2, n2, n * (n + 1)),
      linear(1, n2, n2 + n - 1, n2, n * (n + 1)),
      linear(1, (n - 1) * (n - 1), n * (n - 1), (n - 1) * (n - 1), n * (n - 1)),
      linear(1, (n - 1) * (n - 1), n * (n - 1), n2, n * (n - 1)),
      linear(1, n2, n * (n + 1), n2, n * (n + 1)),
      linear(1, n2, n * (n + 1), n2 + 1, n * (n + 1)),
      linear(1, n2, n * (n + 1), n * (n + 2), n * (n + 1)),
  };
  const LaurentPoly c = LaurentPoly::variable(Var::c);
  r.centre = {LaurentPoly::variable(Var::a) * c - r.difference * r.border[0],
              c};
  r.up = linear(0, 2 * n, 2 * n, 2 * n, 2 * n);
  r.down = linear(0, -(2 * n - 1), -(2 * n - 1), -2 * n, -2 * n);
  r.scalar_factor = c;
  return r;
}

inline ReductionData reduce_even(std::int64_t n) {
  if (n < 1) throw DomainError("reduce_even needs n >= 1");
  using detail::linear;
  ReductionData r;
  r.size = static_cast<std::size_t>(2 * n);
  r.difference = linear(0, 2 * n - 1, 2 * n - 2, 2 * n - 1, 2 * n - 1);
  r.border = {linear(1, n * (n - 1), n * (n - 1), n * n, n * (n - 1))};
  const LaurentPoly b = LaurentPoly::variable(Var::b);
  r.centre = {LaurentPoly::variable(Var::a) * b - r.difference * r.border[0],
              b};
  r.up = linear(0, -(2 * n - 2), -(2 * n - 2), -(2 * n - 1), -(2 * n - 1));
  r.down = linear(0, 2 * n - 1, 2 * n - 1, 2 * n - 1, 2 * n - 1);
  r.scalar_factor = -b;
  return r;
}

/// Parameters (A, B, C, x, y) of the smaller spiral at a numeric point.
inline std::array<Rational, kNumVars> reduced_parameters(
    const ReductionData& r, const EvalPoint& pt) {
  const auto v = pt.plain_values();
  return {r.centre.evaluate(pt), evaluate(r.up, pt), evaluate(r.down, pt),
          v[index(Var::x)], v[index(Var::y)]};
}

/// Checks the determinant relation with both sides computed from the
/// spiral matrices themselves, at `trials` random nonzero rational points.
inline VerificationReport check_recurrence(const ReductionData& r,
                                           std::size_t trials,
                                           std::uint64_t seed) {
  VerificationReport report;
  report.seed = seed;
  for (std::size_t t = 0; t < trials; ++t) {
    SplitMix64 rng(seed, t);
    std::array<Rational, kNumVars> v;
    for (auto& c : v) c = rng.nonzero_rational();
    const EvalPoint pt(v);
    const Rational lhs = det_bareiss_rational(specialize_additive(r.size, v));
    const Rational rhs =
        evaluate(r.scalar_factor, pt) *
        det_bareiss_rational(
            specialize_additive(r.size - 1, reduced_parameters(r, pt)));
    report.record(lhs == rhs,
                  {point_strings(pt), to_string(lhs), to_string(rhs)});
  }
  return report;
}

/// Same relation read through the closed forms:
///   thm1(size)(a,...) == scalar * thm1(size-1)(A,B,C,x,y).
inline VerificationReport check_recurrence_closed_form(const ReductionData& r,
                                                       std::size_t trials,
                                                       std::uint64_t seed) {
  const FactoredForm big = closed_form_factors(Theorem::Additive, r.size);
  const FactoredForm small =
      closed_form_factors(Theorem::Additive, r.size - 1);
  VerificationReport report;
  report.seed = seed;
  for (std::size_t t = 0; t < trials; ++t) {
    SplitMix64 rng(seed, t);
    std::array<Rational, kNumVars> v;
    for (auto& c : v) c = rng.nonzero_rational();
    const EvalPoint pt(v);
    const Rational lhs = big.evaluate(pt);
    const auto params = reduced_parameters(r, pt);
    // B or C may vanish at a sample point, which is fine for a polynomial.
    const Rational rhs =
        evaluate(r.scalar_factor, pt) * small.evaluate_polynomial(params);
    report.record(lhs == rhs,
                  {point_strings(pt), to_string(lhs), to_string(rhs)});
  }
  return report;
}

/// Row reduction of the q-power spiral. At each size the boundary row
/// (last row for odd sizes, first row for even sizes) minus a monomial
/// multiple of its neighbour must leave a single nonzero entry, in the first
/// (odd) or last (even) column; deleting that row and column must give the
/// next smaller q-power spiral. The accumulated pivots must reproduce the
/// closed form. Each of these checks is one trial of the report.
inline VerificationReport qreduction_check(std::size_t n) {
  if (n < 2) throw DomainError("qreduction_check needs n >= 2");
  VerificationReport report;
  SquareMatrix<LaurentPoly> m = build_qpower(n);
  LaurentPoly det_from_pivots(1L);

  for (std::size_t size = n; size >= 2; --size) {
    const bool odd = size % 2 == 1;
    const std::size_t boundary = odd ? size - 1 : 0;
    const std::size_t neighbour = odd ? size - 2 : 1;
    const std::size_t ratio_col = odd ? size - 1 : 0;
    const std::size_t pivot_col = odd ? 0 : size - 1;
    const std::string where = "size=" + std::to_string(size);

    const auto& top = m(boundary, ratio_col).terms();
    const auto& bottom = m(neighbour, ratio_col).terms();
    if (top.size() != 1 || bottom.size() != 1) {
      report.record(false, {{where}, "non-monomial entry", "monomial"});
      return report;
    }
    const LaurentPoly ratio = LaurentPoly::monomial(top.begin()->first -
                                                    bottom.begin()->first);

    std::size_t nonzero = 0;
    bool pivot_ok = false;
    LaurentPoly pivot;
    for (std::size_t j = 0; j < size; ++j) {
      LaurentPoly v = m(boundary, j) - ratio * m(neighbour, j);
      if (!v.is_zero()) {
        ++nonzero;
        if (j == pivot_col) {
          pivot_ok = true;
          pivot = std::move(v);
        }
      }
    }
    const bool single = nonzero == 1 && pivot_ok;
    report.record(single, {{where}, std::to_string(nonzero) + " nonzero",
                           "1 nonzero"});
    if (!single) return report;

    SquareMatrix<LaurentPoly> minor(size - 1);
    for (std::size_t i = 0, mi = 0; i < size; ++i) {
      if (i == boundary) continue;
      for (std::size_t j = 0, mj = 0; j < size; ++j) {
        if (j == pivot_col) continue;
        minor(mi, mj++) = m(i, j);
      }
      ++mi;
    }
    const bool nested = minor == build_qpower(size - 1);
    report.record(nested, {{where}, "minor", "build_qpower(" +
                                                 std::to_string(size - 1) +
                                                 ")"});
    const bool negative = (boundary + pivot_col) % 2 == 1;
    det_from_pivots *= negative ? -pivot : pivot;
    m = std::move(minor);
  }
  det_from_pivots *= m(0, 0);

  const LaurentPoly expected = closed_form(Theorem::QPower, n);
  report.record(det_from_pivots == expected,
                {{"size=" + std::to_string(n)}, to_string(det_from_pivots),
                 to_string(expected)});
  return report;
}

}  // namespace spiraldet
