#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <utility>

#include "spiraldet/errors.hpp"
#include "spiraldet/exponent.hpp"
#include "spiraldet/rational.hpp"

namespace spiraldet {

/// Sparse Laurent polynomial in a, b, c, x, y with half-integer exponents and
/// arbitrary-precision integer coefficients. The term map never stores a zero
/// coefficient, so structural equality is polynomial equality.
class LaurentPoly {
 public:
  using TermMap = std::map<ExponentVector, BigInt>;

  LaurentPoly() = default;

  // Constants convert implicitly so that `p + 1` and `2 * p` read naturally.
  LaurentPoly(long constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.emplace(ExponentVector::zero(), BigInt(constant));
  }
  LaurentPoly(const BigInt& constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.emplace(ExponentVector::zero(), constant);
  }

  static LaurentPoly monomial(const ExponentVector& e, const BigInt& coeff = 1) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.emplace(e, coeff);
    return p;
  }

  static LaurentPoly variable(Var v) {
    return monomial(ExponentVector::of(v));
  }

  /// Builds a polynomial from (exponents, coefficient) pairs, merging repeats.
  static LaurentPoly from_terms(
      std::initializer_list<std::pair<ExponentVector, long>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, BigInt(c));
    return p;
  }

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  BigInt coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// True if some term has a half-integer exponent.
  bool has_half_exponents() const noexcept {
    for (const auto& [e, c] : terms_) {
      if (!e.is_integral()) return true;
    }
    return false;
  }

  /// Variables that occur with an odd doubled exponent in some term.
  std::array<bool, kNumVars> half_exponent_vars() const noexcept {
    std::array<bool, kNumVars> out{};
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < kNumVars; ++i) {
        if (e.doubled[i] % 2 != 0) out[i] = true;
      }
    }
    return out;
  }

  /// Adds coeff * monomial(e) in place.
  void add_term(const ExponentVector& e, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Replaces variable `from` by variable `to` (e.g. y := x).
  LaurentPoly substitute(Var from, Var to) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) {
      ExponentVector moved = e;
      moved.doubled[index(to)] += moved.doubled[index(from)];
      moved.doubled[index(from)] = 0;
      out.add_term(moved, c);
    }
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) {
    return p += q;
  }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) {
    return p -= q;
  }
  friend LaurentPoly operator-(LaurentPoly p) {
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
  }

  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly out;
    BigInt prod;
    for (const auto& [ep, cp] : p.terms_) {
      for (const auto& [eq, cq] : q.terms_) {
        prod = cp * cq;
        out.add_term(ep + eq, prod);
      }
    }
    return out;
  }

  /// Non-negative integer power.
  LaurentPoly pow(unsigned k) const {
    LaurentPoly result(1L);
    LaurentPoly base = *this;
    while (k > 0) {
      if (k & 1U) result *= base;
      k >>= 1U;
      if (k > 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  TermMap terms_;
};

/// [alpha] = alpha - alpha^{-1}; zero when alpha = 1.
inline LaurentPoly bracket(const ExponentVector& m) {
  if (m.is_zero()) return {};
  LaurentPoly p = LaurentPoly::monomial(m);
  p.add_term(-m, BigInt(-1));
  return p;
}

/// <alpha> = alpha + alpha^{-1}; the constant 2 when alpha = 1.
inline LaurentPoly angle(const ExponentVector& m) {
  LaurentPoly p = LaurentPoly::monomial(m);
  p.add_term(-m, BigInt(1));
  return p;
}

/// A point in (a, b, c, x, y). When root[i] is set, values[i] is read as the
/// square root of variable i, so variable i equals values[i]^2 and
/// half-integer exponents of it evaluate exactly.
struct EvalPoint {
  std::array<Rational, kNumVars> values;
  std::array<bool, kNumVars> root{};

  EvalPoint() = default;
  explicit EvalPoint(std::array<Rational, kNumVars> v,
                     std::array<bool, kNumVars> r = {})
      : values(std::move(v)), root(r) {}

  /// The actual value of variable v (squares root coordinates).
  Rational value_of(Var v) const {
    const auto& s = values[index(v)];
    return root[index(v)] ? Rational(s * s) : s;
  }

  /// The point with every root coordinate squared and flags cleared.
  std::array<Rational, kNumVars> plain_values() const {
    std::array<Rational, kNumVars> out;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      out[i] = value_of(static_cast<Var>(i));
    }
    return out;
  }
};

inline Rational evaluate(const LaurentPoly& p, const EvalPoint& pt) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (pt.values[i] == 0) {
      throw ZeroCoordinate("coordinate " + std::string(kVarNames[i]) +
                           " is zero");
    }
  }
  // Powers are cached per (variable, exponent); polynomials here have few
  // distinct exponents per variable.
  std::array<std::map<std::int64_t, Rational>, kNumVars> cache;
  auto power = [&](std::size_t i, std::int64_t d) -> const Rational& {
    auto it = cache[i].find(d);
    if (it != cache[i].end()) return it->second;
    Rational v;
    if (pt.root[i]) {
      v = pow(pt.values[i], static_cast<long>(d));
    } else {
      if (d % 2 != 0) {
        throw HalfExponentAtPlainCoordinate(
            "variable " + std::string(kVarNames[i]) +
            " has a half-integer exponent but is not a root coordinate");
      }
      v = pow(pt.values[i], static_cast<long>(d / 2));
    }
    return cache[i].emplace(d, std::move(v)).first->second;
  };

  Rational sum(0);
  Rational term;
  for (const auto& [e, c] : p.terms()) {
    term = c;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (e.doubled[i] != 0) term *= power(i, e.doubled[i]);
    }
    sum += term;
  }
  return sum;
}

inline Rational evaluate(const LaurentPoly& p,
                         const std::array<Rational, kNumVars>& values) {
  return evaluate(p, EvalPoint(values));
}

/// Evaluation of an ordinary polynomial (non-negative integer exponents),
/// where zero coordinates are allowed.
inline Rational evaluate_polynomial(
    const LaurentPoly& p, const std::array<Rational, kNumVars>& values) {
  Rational sum(0);
  Rational term;
  for (const auto& [e, c] : p.terms()) {
    term = c;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      const std::int64_t d = e.doubled[i];
      if (d < 0 || d % 2 != 0) {
        throw DomainError("evaluate_polynomial needs non-negative integer "
                          "exponents");
      }
      if (d != 0) term *= pow(values[i], static_cast<long>(d / 2));
    }
    sum += term;
  }
  return sum;
}

}  // namespace spiraldet
