#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "spiraldet/errors.hpp"
#include "spiraldet/laurent.hpp"
#include "spiraldet/rational.hpp"

namespace spiraldet {

/// sign * prod(factors), kept unexpanded so that large instances can be
/// evaluated factor by factor. An empty product is 1.
struct FactoredForm {
  int sign = 1;
  std::vector<LaurentPoly> factors;

  LaurentPoly expand() const {
    LaurentPoly p(static_cast<long>(sign));
    for (const auto& f : factors) p *= f;
    return p;
  }

  Rational evaluate(const EvalPoint& pt) const {
    Rational r(sign);
    for (const auto& f : factors) {
      r *= spiraldet::evaluate(f, pt);
      if (r == 0) break;
    }
    return r;
  }

  /// For factors that are ordinary polynomials; zero coordinates allowed.
  Rational evaluate_polynomial(
      const std::array<Rational, kNumVars>& values) const {
    Rational r(sign);
    for (const auto& f : factors) r *= spiraldet::evaluate_polynomial(f, values);
    return r;
  }

  /// Variables with half-integer exponents in some factor; these must be
  /// sampled as square roots when evaluating.
  std::array<bool, kNumVars> half_exponent_vars() const {
    std::array<bool, kNumVars> out{};
    for (const auto& f : factors) {
      const auto v = f.half_exponent_vars();
      for (std::size_t i = 0; i < kNumVars; ++i) out[i] = out[i] || v[i];
    }
    return out;
  }
};

namespace detail {

inline int parity_sign(std::int64_t k) { return k % 2 == 0 ? 1 : -1; }

/// ca*a + cb*b + cc*c + cx*x + cy*y in the additive reading.
inline LaurentPoly linear(std::int64_t ca, std::int64_t cb, std::int64_t cc,
                          std::int64_t cx, std::int64_t cy) {
  LaurentPoly p;
  const std::int64_t cs[] = {ca, cb, cc, cx, cy};
  for (std::size_t i = 0; i < kNumVars; ++i) {
    p.add_term(ExponentVector::of(static_cast<Var>(i)),
               BigInt(static_cast<long>(cs[i])));
  }
  return p;
}

/// coeff * u * v for variables u, v.
inline void add_quadratic(LaurentPoly& p, std::int64_t coeff, Var u, Var v) {
  p.add_term(ExponentVector::of(u) + ExponentVector::of(v),
             BigInt(static_cast<long>(coeff)));
}

/// i(b+c) + (i+1)(x+y).
inline LaurentPoly additive_step_factor(std::int64_t i) {
  return linear(0, i, i, i + 1, i + 1);
}

/// 1 - (bc)^i (xy)^(i+1), the multiplicative reading of the same exponent.
inline LaurentPoly q_step_factor(std::int64_t i) {
  LaurentPoly p(1L);
  p.add_term(ExponentVector::integral(0, i, i, i + 1, i + 1), BigInt(-1));
  return p;
}

inline std::int64_t exact_third(std::int64_t v) {
  if (v % 3 != 0) {
    throw Error("exponent " + std::to_string(v) + " is not divisible by 3");
  }
  return v / 3;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Additive spiral M_n: polynomials in the additive reading of a, b, c, x, y.

inline FactoredForm thm1_even_factors(std::int64_t n) {
  if (n == 0) return {};
  using detail::add_quadratic;
  LaurentPoly q;
  add_quadratic(q, 1, Var::a, Var::x);
  add_quadratic(q, n * n, Var::b, Var::x);
  add_quadratic(q, n * (n - 1), Var::c, Var::x);
  add_quadratic(q, n * n, Var::x, Var::x);
  add_quadratic(q, 1, Var::a, Var::y);
  add_quadratic(q, (n - 1) * (n - 1), Var::b, Var::y);
  add_quadratic(q, n * (n - 1), Var::c, Var::y);
  add_quadratic(q, n * (n - 1), Var::y, Var::y);
  add_quadratic(q, n * (2 * n - 1), Var::x, Var::y);
  FactoredForm f{detail::parity_sign(n + 1), {std::move(q)}};
  for (std::int64_t i = 1; i <= 2 * n - 2; ++i) {
    f.factors.push_back(detail::additive_step_factor(i));
  }
  return f;
}

inline FactoredForm thm1_odd_factors(std::int64_t n) {
  // The general expression needs the reciprocal reading of an upper limit
  // below the lower one at n = 0; the 1x1 determinant is just a.
  if (n == 0) return {1, {LaurentPoly::variable(Var::a)}};
  using detail::add_quadratic;
  LaurentPoly q;
  add_quadratic(q, 1, Var::a, Var::x);
  add_quadratic(q, n * n, Var::b, Var::x);
  add_quadratic(q, n * (n - 1), Var::c, Var::x);
  add_quadratic(q, n * n, Var::x, Var::x);
  add_quadratic(q, 1, Var::a, Var::y);
  add_quadratic(q, n * n, Var::b, Var::y);
  add_quadratic(q, n * (n + 1), Var::c, Var::y);
  add_quadratic(q, n * (n + 1), Var::y, Var::y);
  add_quadratic(q, n * (2 * n + 1), Var::x, Var::y);
  FactoredForm f{detail::parity_sign(n), {std::move(q)}};
  for (std::int64_t i = 1; i <= 2 * n - 1; ++i) {
    f.factors.push_back(detail::additive_step_factor(i));
  }
  return f;
}

inline LaurentPoly thm1_even(std::int64_t n) {
  return thm1_even_factors(n).expand();
}
inline LaurentPoly thm1_odd(std::int64_t n) {
  return thm1_odd_factors(n).expand();
}

// ---------------------------------------------------------------------------
// q-power spiral Q_n, in the multiplicative variables q^a, ..., q^y.

inline FactoredForm thm2_even_factors(std::int64_t n) {
  const std::int64_t bx = detail::exact_third(n * (2 * n * n + 1));
  const std::int64_t cy = detail::exact_third(2 * (n - 1) * n * (n + 1));
  FactoredForm f{detail::parity_sign(n),
                 {LaurentPoly::monomial(
                     ExponentVector::integral(2 * n, bx, cy, bx, cy))}};
  for (std::int64_t i = 0; i <= 2 * n - 2; ++i) {
    f.factors.push_back(detail::q_step_factor(i));
  }
  return f;
}

inline FactoredForm thm2_odd_factors(std::int64_t n) {
  const std::int64_t e = detail::exact_third(n * (n + 1) * (2 * n + 1));
  FactoredForm f{detail::parity_sign(n),
                 {LaurentPoly::monomial(
                     ExponentVector::integral(2 * n + 1, e, e, e, e))}};
  for (std::int64_t i = 0; i <= 2 * n - 1; ++i) {
    f.factors.push_back(detail::q_step_factor(i));
  }
  return f;
}

inline LaurentPoly thm2_even(std::int64_t n) {
  return thm2_even_factors(n).expand();
}
inline LaurentPoly thm2_odd(std::int64_t n) {
  return thm2_odd_factors(n).expand();
}

// ---------------------------------------------------------------------------
// Bracket spiral Z_n(a, b, c, x, x). Factors may carry half-integer
// exponents in b and c; the expanded product never does.

namespace detail {

/// [(bc)^(k/2) x^(k+1)]
inline LaurentPoly bracket_step(std::int64_t k) {
  return bracket(ExponentVector::halves(0, k, k, 2 * (k + 1), 0));
}

/// <a b^(k(k+1)) c^(k^2) x^(k(2k+1))>
inline LaurentPoly angle_upper(std::int64_t k) {
  return angle(
      ExponentVector::integral(1, k * (k + 1), k * k, k * (2 * k + 1), 0));
}

/// <a b^((2k^2-2k+1)/2) c^((2k^2-1)/2) x^(k(2k-1))>
inline LaurentPoly angle_lower(std::int64_t k) {
  return angle(ExponentVector::halves(2, 2 * k * k - 2 * k + 1, 2 * k * k - 1,
                                      2 * k * (2 * k - 1), 0));
}

inline LaurentPoly require_integral(LaurentPoly p) {
  if (p.has_half_exponents()) {
    throw Error("expanded bracket determinant has half-integer exponents");
  }
  return p;
}

}  // namespace detail

inline FactoredForm thm3_even_factors(std::int64_t n) {
  if (n == 0) return {};
  FactoredForm f{detail::parity_sign(n + 1),
                 {bracket(ExponentVector::integral(2, 2 * n * n - 2 * n + 1,
                                                   2 * n * n - 2 * n,
                                                   2 * n * (2 * n - 1), 0))}};
  for (std::int64_t k = 0; k <= 2 * n - 2; ++k) {
    f.factors.push_back(detail::bracket_step(k));
  }
  for (std::int64_t k = 1; k <= n - 1; ++k) {
    f.factors.push_back(detail::angle_upper(k));
    f.factors.push_back(detail::angle_lower(k));
  }
  return f;
}

inline FactoredForm thm3_odd_factors(std::int64_t n) {
  // As for the additive case, n = 0 would need a reciprocal empty product.
  if (n == 0) return {1, {bracket(ExponentVector::of(Var::a))}};
  FactoredForm f{detail::parity_sign(n),
                 {bracket(ExponentVector::integral(2, 2 * n * n, 2 * n * n,
                                                   2 * n * (2 * n + 1), 0))}};
  for (std::int64_t k = 0; k <= 2 * n - 1; ++k) {
    f.factors.push_back(detail::bracket_step(k));
  }
  for (std::int64_t k = 1; k <= n - 1; ++k) {
    f.factors.push_back(detail::angle_upper(k));
  }
  for (std::int64_t k = 1; k <= n; ++k) {
    f.factors.push_back(detail::angle_lower(k));
  }
  return f;
}

inline LaurentPoly thm3_even(std::int64_t n) {
  return detail::require_integral(thm3_even_factors(n).expand());
}
inline LaurentPoly thm3_odd(std::int64_t n) {
  return detail::require_integral(thm3_odd_factors(n).expand());
}

// ---------------------------------------------------------------------------
// Dispatch by matrix size.

enum class Theorem { Additive = 1, QPower = 2, Bracket = 3 };

inline FactoredForm closed_form_factors(Theorem t, std::size_t size) {
  const auto n = static_cast<std::int64_t>(size / 2);
  const bool even = size % 2 == 0;
  switch (t) {
    case Theorem::Additive:
      return even ? thm1_even_factors(n) : thm1_odd_factors(n);
    case Theorem::QPower:
      return even ? thm2_even_factors(n) : thm2_odd_factors(n);
    case Theorem::Bracket:
      return even ? thm3_even_factors(n) : thm3_odd_factors(n);
  }
  throw DomainError("unknown theorem");
}

inline LaurentPoly closed_form(Theorem t, std::size_t size) {
  LaurentPoly p = closed_form_factors(t, size).expand();
  return t == Theorem::Bracket ? detail::require_integral(std::move(p)) : p;
}

}  // namespace spiraldet
