#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spiraldet/closed_forms.hpp"
#include "spiraldet/determinant.hpp"
#include "spiraldet/serialize.hpp"
#include "spiraldet/spiral.hpp"
#include "spiraldet/verify.hpp"

namespace spiraldet {

/// Integer sequences obtained by specialising the spiral determinants.
///   Inward:  a = n^2, b = c = x = y = -1 (1..n^2 winding into the centre).
///   Outward: a = b = c = x = y = 1 (1..n^2 winding out of the centre).
///   QSpiral: all exponent parameters 1, entries q^1..q^(n^2).
enum class SequenceId { InwardSpiral, OutwardSpiral, QSpiral };

inline std::string_view sequence_name(SequenceId id) {
  switch (id) {
    case SequenceId::InwardSpiral: return "inward";
    case SequenceId::OutwardSpiral: return "outward";
    case SequenceId::QSpiral: return "qspiral";
  }
  return "?";
}

inline std::optional<SequenceId> parse_sequence(std::string_view s) {
  if (s == "inward") return SequenceId::InwardSpiral;
  if (s == "outward") return SequenceId::OutwardSpiral;
  if (s == "qspiral") return SequenceId::QSpiral;
  return std::nullopt;
}

/// Integer for the numeric sequences, polynomial in q for QSpiral.
using SequenceTerm = std::variant<BigInt, LaurentPoly>;

/// Collapses a^i b^j c^k x^l y^m to q^(i+j+k+l+m); q is stored in slot a.
inline LaurentPoly collapse_to_q(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) {
    std::int64_t total = 0;
    for (auto d : e.doubled) total += d;
    ExponentVector q;
    q.doubled[index(Var::a)] = total;
    out.add_term(q, c);
  }
  return out;
}

/// Renders a polynomial produced by collapse_to_q in the variable q.
inline std::string q_to_string(const LaurentPoly& p) {
  std::string s = to_string(p);
  for (auto& ch : s) {
    if (ch == 'a') ch = 'q';
  }
  return s;
}

inline std::string term_to_string(const SequenceTerm& t) {
  if (const auto* z = std::get_if<BigInt>(&t)) return z->get_str();
  return q_to_string(std::get<LaurentPoly>(t));
}

inline std::array<Rational, kNumVars> sequence_parameters(SequenceId id,
                                                          std::size_t n) {
  if (id == SequenceId::InwardSpiral) {
    const Rational m(-1);
    return {Rational(static_cast<long>(n * n)), m, m, m, m};
  }
  const Rational one(1);
  return {one, one, one, one, one};
}

namespace detail {
inline BigInt require_integer(const Rational& r) {
  if (!is_integer(r)) {
    throw Error("sequence term " + to_string(r) + " is not an integer");
  }
  return r.get_num();
}
}  // namespace detail

/// Closed-form value of the n-th term.
inline SequenceTerm term(SequenceId id, std::size_t n) {
  if (n == 0) throw DomainError("sequence terms start at n = 1");
  if (id == SequenceId::QSpiral) {
    return collapse_to_q(closed_form(Theorem::QPower, n));
  }
  const auto params = sequence_parameters(id, n);
  return detail::require_integer(
      closed_form_factors(Theorem::Additive, n).evaluate_polynomial(params));
}

/// Brute-force determinant of the specialised spiral matrix.
inline SequenceTerm oracle_term(SequenceId id, std::size_t n) {
  if (n == 0) throw DomainError("sequence terms start at n = 1");
  if (id == SequenceId::QSpiral) {
    const auto qm = build_qpower(n).map(
        [](const LaurentPoly& p) { return collapse_to_q(p); });
    return det_cofactor(qm, SizeOverride::Allow);
  }
  return detail::require_integer(
      det_bareiss_rational(specialize_additive(n, sequence_parameters(id, n))));
}

struct SequenceRow {
  std::size_t n = 0;
  SequenceTerm term;
  SequenceTerm oracle;
  bool match = false;
};

inline std::vector<SequenceRow> sequence_table(SequenceId id,
                                               std::size_t count) {
  std::vector<SequenceRow> rows;
  for (std::size_t n = 1; n <= count; ++n) {
    SequenceRow r{n, term(id, n), oracle_term(id, n), false};
    r.match = r.term == r.oracle;
    rows.push_back(std::move(r));
  }
  return rows;
}

inline VerificationReport verify_sequence(SequenceId id, std::size_t count) {
  if (count == 0) throw DomainError("verify_sequence needs count >= 1");
  VerificationReport report;
  for (const auto& r : sequence_table(id, count)) {
    report.record(r.match, {{"n=" + std::to_string(r.n)},
                            term_to_string(r.term),
                            term_to_string(r.oracle)});
  }
  return report;
}

/// CSV with header "n,term,oracle,match".
inline std::string sequence_csv(const std::vector<SequenceRow>& rows) {
  std::string out = "n,term,oracle,match\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + ",\"" + term_to_string(r.term) + "\",\"" +
           term_to_string(r.oracle) + "\"," + (r.match ? "true" : "false") +
           "\n";
  }
  return out;
}

}  // namespace spiraldet
