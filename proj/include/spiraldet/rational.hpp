#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "spiraldet/errors.hpp"

namespace spiraldet {

using BigInt = mpz_class;

/// Exact rational in lowest terms with positive denominator.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline Rational parse_rational(std::string_view text) {
  Rational r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0 ||
      r.get_den() == 0) {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  r.canonicalize();
  return r;
}

inline BigInt parse_bigint(std::string_view text) {
  BigInt z;
  if (text.empty() || z.set_str(std::string(text), 10) != 0) {
    throw ParseError("not an integer: '" + std::string(text) + "'");
  }
  return z;
}

/// r^e for any integer e; r must be nonzero when e < 0.
inline Rational pow(const Rational& r, long e) {
  if (e == 0) return Rational(1);
  const unsigned long k = e < 0 ? static_cast<unsigned long>(-e)
                                : static_cast<unsigned long>(e);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), k);
  Rational out = e > 0 ? Rational(num, den) : Rational(den, num);
  out.canonicalize();
  return out;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace spiraldet
