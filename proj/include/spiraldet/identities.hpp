#pragma once

#include <cstddef>
#include <cstdint>

#include "spiraldet/closed_forms.hpp"
#include "spiraldet/determinant.hpp"
#include "spiraldet/spiral.hpp"
#include "spiraldet/verify.hpp"

namespace spiraldet {

/// The symbolic matrix a theorem speaks about: M_n, Q_n or Z_n(a,b,c,x,x).
inline SquareMatrix<LaurentPoly> theorem_matrix(Theorem t, std::size_t n) {
  switch (t) {
    case Theorem::Additive: return build_additive_poly(n);
    case Theorem::QPower: return build_qpower(n);
    case Theorem::Bracket: return build_bracket(n, Horizontal::Tied);
  }
  throw DomainError("unknown theorem");
}

/// Exact comparison of the cofactor determinant with the expanded closed
/// form.
inline bool theorem_holds_exactly(Theorem t, std::size_t n) {
  return det_cofactor(theorem_matrix(t, n)) == closed_form(t, n);
}

/// Randomised comparison: Bareiss determinant of the numerically specialised
/// matrix against the factored closed form at the same point.
inline VerificationReport verify_theorem_random(Theorem t, std::size_t n,
                                                std::size_t trials,
                                                std::uint64_t seed) {
  const FactoredForm rhs = closed_form_factors(t, n);
  MatrixGenerator gen;
  if (t == Theorem::Additive) {
    gen = [n](const EvalPoint& pt) {
      return specialize_additive(n, pt.plain_values());
    };
  } else {
    gen = specializing(theorem_matrix(t, n));
  }
  return verify_identity(
      gen, [&rhs](const EvalPoint& pt) { return rhs.evaluate(pt); }, trials,
      seed, rhs.half_exponent_vars());
}

}  // namespace spiraldet
