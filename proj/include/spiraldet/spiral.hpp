#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spiraldet/errors.hpp"
#include "spiraldet/laurent.hpp"
#include "spiraldet/matrix.hpp"
#include "spiraldet/random.hpp"
#include "spiraldet/rational.hpp"
#include "spiraldet/serialize.hpp"

namespace spiraldet {

/// Step directions in the order the spiral cycles through them. Moving
/// right adds x, up adds b, left adds y, down adds c.
enum class Direction { Right, Up, Left, Down };

enum class Family { Additive, QPower, Bracket, GeneralizedBracket };

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::Additive: return "additive";
    case Family::QPower: return "qpower";
    case Family::Bracket: return "bracket";
    case Family::GeneralizedBracket: return "generalized";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
  if (s == "additive") return Family::Additive;
  if (s == "qpower") return Family::QPower;
  if (s == "bracket") return Family::Bracket;
  if (s == "generalized") return Family::GeneralizedBracket;
  return std::nullopt;
}

/// Number of steps taken in each direction, i.e. the exponents of b, c, x, y
/// accumulated on the way from the centre to a cell.
struct StepCounts {
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const StepCounts&, const StepCounts&) = default;
};

struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct ExponentMatrix {
  std::size_t n = 0;
  SquareMatrix<StepCounts> cells;
  /// Cells in visiting order, starting at the centre.
  std::vector<Cell> path;
  /// steps[k] is the direction taken from path[k] to path[k + 1].
  std::vector<Direction> steps;
};

/// Start of the path: (m, m) for n = 2m+1 and (m, m-1) for n = 2m, 0-based.
inline Cell spiral_centre(std::size_t n) {
  const std::size_t m = n / 2;
  return n % 2 == 1 ? Cell{m, m} : Cell{m, m - 1};
}

/// Walks the spiral outward from the centre: runs of 1,1,2,2,3,3,... in the
/// cycle right, up, left, down, stopping after n^2 - 1 steps.
inline ExponentMatrix spiral_exponents(std::size_t n) {
  if (n == 0) throw DomainError("spiral size must be at least 1");
  ExponentMatrix em{n, SquareMatrix<StepCounts>(n), {}, {}};
  const std::size_t total = n * n - 1;
  em.path.reserve(n * n);
  em.steps.reserve(total);

  Cell pos = spiral_centre(n);
  StepCounts counts;
  em.path.push_back(pos);
  em.cells(pos.row, pos.col) = counts;

  constexpr std::array<Direction, 4> cycle = {Direction::Right, Direction::Up,
                                              Direction::Left, Direction::Down};
  std::size_t taken = 0;
  std::size_t turn = 0;
  for (std::size_t run = 1; taken < total; ++run) {
    for (int leg = 0; leg < 2 && taken < total; ++leg, ++turn) {
      const Direction d = cycle[turn % 4];
      for (std::size_t s = 0; s < run && taken < total; ++s, ++taken) {
        switch (d) {
          case Direction::Right: ++pos.col; ++counts.x; break;
          case Direction::Up: --pos.row; ++counts.b; break;
          case Direction::Left: --pos.col; ++counts.y; break;
          case Direction::Down: ++pos.row; ++counts.c; break;
        }
        em.path.push_back(pos);
        em.steps.push_back(d);
        em.cells(pos.row, pos.col) = counts;
      }
    }
  }
  return em;
}

/// How many steps the n x n path takes in each direction.
struct DirectionTally {
  std::size_t right = 0, up = 0, left = 0, down = 0;
};

inline DirectionTally tally_steps(std::size_t n) {
  DirectionTally t;
  for (Direction d : spiral_exponents(n).steps) {
    switch (d) {
      case Direction::Right: ++t.right; break;
      case Direction::Up: ++t.up; break;
      case Direction::Left: ++t.left; break;
      case Direction::Down: ++t.down; break;
    }
  }
  return t;
}

/// a + b_coeff*b + c_coeff*c + x_coeff*x + y_coeff*y.
struct LinearForm {
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;

  static LinearForm from_counts(const StepCounts& s) {
    return {s.b, s.c, s.x, s.y};
  }

  /// As a polynomial in the additive reading of a, b, c, x, y.
  LaurentPoly to_poly() const {
    LaurentPoly p = LaurentPoly::variable(Var::a);
    p.add_term(ExponentVector::of(Var::b), BigInt(static_cast<long>(b)));
    p.add_term(ExponentVector::of(Var::c), BigInt(static_cast<long>(c)));
    p.add_term(ExponentVector::of(Var::x), BigInt(static_cast<long>(x)));
    p.add_term(ExponentVector::of(Var::y), BigInt(static_cast<long>(y)));
    return p;
  }

  Rational evaluate(const std::array<Rational, kNumVars>& v) const {
    Rational r = v[0];
    r += v[1] * b;
    r += v[2] * c;
    r += v[3] * x;
    r += v[4] * y;
    return r;
  }

  /// Paper-style layout, e.g. "a+4 b+2 c+4 x+5 y".
  std::string to_latex() const {
    std::string out = "a";
    const std::array<std::pair<std::int64_t, char>, 4> parts = {
        {{b, 'b'}, {c, 'c'}, {x, 'x'}, {y, 'y'}}};
    for (const auto& [k, v] : parts) {
      if (k == 0) continue;
      out += k > 0 ? "+" : "-";
      const std::int64_t mag = k > 0 ? k : -k;
      if (mag != 1) out += std::to_string(mag) + " ";
      out += v;
    }
    return out;
  }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

inline SquareMatrix<LinearForm> build_additive(std::size_t n) {
  return spiral_exponents(n).cells.map(
      [](const StepCounts& s) { return LinearForm::from_counts(s); });
}

/// build_additive as polynomials, ready for symbolic determinants.
inline SquareMatrix<LaurentPoly> build_additive_poly(std::size_t n) {
  return build_additive(n).map([](const LinearForm& f) { return f.to_poly(); });
}

inline ExponentVector monomial_of(const StepCounts& s) {
  return ExponentVector::integral(1, s.b, s.c, s.x, s.y);
}

/// Q_n: each entry is the monomial a*b^eb*c^ec*x^ex*y^ey, the multiplicative
/// encoding of q^(a + eb*b + ec*c + ex*x + ey*y).
inline SquareMatrix<LaurentPoly> build_qpower(std::size_t n) {
  return spiral_exponents(n).cells.map(
      [](const StepCounts& s) { return LaurentPoly::monomial(monomial_of(s)); });
}

/// Horizontal steps either multiply by x (right) and y (left), or both by x.
enum class Horizontal { Independent, Tied };

/// Z_n: entry [a*b^eb*c^ec*x^ex*y^ey]; with Horizontal::Tied, y := x.
inline SquareMatrix<LaurentPoly> build_bracket(
    std::size_t n, Horizontal h = Horizontal::Independent) {
  return spiral_exponents(n).cells.map([h](const StepCounts& s) {
    ExponentVector e = monomial_of(s);
    if (h == Horizontal::Tied) {
      e = ExponentVector::integral(1, s.b, s.c, s.x + s.y, 0);
    }
    return bracket(e);
  });
}

struct SpiralSpec {
  std::size_t n = 1;
  Family family = Family::Additive;
  /// GeneralizedBracket only: multiplier for the k-th up step / down step.
  std::vector<ExponentVector> up_increments;
  std::vector<ExponentVector> down_increments;
};

/// Bracket spiral where the k-th up step multiplies by up_increments[k], the
/// k-th down step by down_increments[k], and every horizontal step by x.
inline SquareMatrix<LaurentPoly> build_generalized_bracket(
    const SpiralSpec& spec) {
  if (spec.family != Family::GeneralizedBracket) {
    throw DomainError("build_generalized_bracket needs a generalized spec");
  }
  const ExponentMatrix em = spiral_exponents(spec.n);
  const DirectionTally t = tally_steps(spec.n);
  if (spec.up_increments.size() != t.up ||
      spec.down_increments.size() != t.down) {
    throw LengthMismatch(
        "expected " + std::to_string(t.up) + " up and " +
        std::to_string(t.down) + " down increments, got " +
        std::to_string(spec.up_increments.size()) + " and " +
        std::to_string(spec.down_increments.size()));
  }
  const ExponentVector x = ExponentVector::of(Var::x);
  SquareMatrix<LaurentPoly> out(spec.n);
  ExponentVector alpha = ExponentVector::of(Var::a);
  out(em.path[0].row, em.path[0].col) = bracket(alpha);
  std::size_t up = 0, down = 0;
  for (std::size_t k = 0; k < em.steps.size(); ++k) {
    switch (em.steps[k]) {
      case Direction::Right:
      case Direction::Left: alpha += x; break;
      case Direction::Up: alpha += spec.up_increments[up++]; break;
      case Direction::Down: alpha += spec.down_increments[down++]; break;
    }
    const Cell& cell = em.path[k + 1];
    out(cell.row, cell.col) = bracket(alpha);
  }
  return out;
}

/// Generalized spec whose increments reproduce build_bracket(n, Tied).
inline SpiralSpec plain_generalized_spec(std::size_t n) {
  const DirectionTally t = tally_steps(n);
  return {n, Family::GeneralizedBracket,
          std::vector<ExponentVector>(t.up, ExponentVector::of(Var::b)),
          std::vector<ExponentVector>(t.down, ExponentVector::of(Var::c))};
}

/// Generalized spec with every up/down increment a random monomial whose
/// exponents are integers in [-bound, bound].
inline SpiralSpec random_generalized_spec(std::size_t n, std::uint64_t seed,
                                          std::int64_t bound = 2) {
  SplitMix64 rng(seed);
  auto draw = [&] {
    ExponentVector e;
    for (auto& d : e.doubled) d = 2 * rng.uniform(-bound, bound);
    return e;
  };
  const DirectionTally t = tally_steps(n);
  SpiralSpec spec{n, Family::GeneralizedBracket, {}, {}};
  for (std::size_t k = 0; k < t.up; ++k) spec.up_increments.push_back(draw());
  for (std::size_t k = 0; k < t.down; ++k) {
    spec.down_increments.push_back(draw());
  }
  return spec;
}

/// Numeric M_n at values (a, b, c, x, y).
inline SquareMatrix<Rational> specialize_additive(
    std::size_t n, const std::array<Rational, kNumVars>& values) {
  return build_additive(n).map(
      [&](const LinearForm& f) { return f.evaluate(values); });
}

inline SquareMatrix<Rational> specialize(const SquareMatrix<LaurentPoly>& m,
                                         const EvalPoint& pt) {
  return m.map([&](const LaurentPoly& p) { return evaluate(p, pt); });
}

// ---------------------------------------------------------------------------
// Emission

/// "ab^4c^2x^4y^5" style monomial, or "1".
inline std::string monomial_latex(const ExponentVector& e) {
  std::string out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    const std::int64_t d = e.doubled[i];
    if (d == 0) continue;
    out += kVarNames[i];
    if (d == 2) continue;
    if (d % 2 == 0) {
      const std::string s = std::to_string(d / 2);
      out += s.size() == 1 ? "^" + s : "^{" + s + "}";
    } else {
      out += "^{" + std::to_string(d) + "/2}";
    }
  }
  return out.empty() ? "1" : out;
}

/// LaTeX for a polynomial: single-monomial and bracket-shaped polynomials
/// get the compact "[ ... ]" notation, anything else falls back to text.
inline std::string poly_latex(const LaurentPoly& p) {
  if (p.size() == 1) {
    const auto& [e, c] = *p.terms().begin();
    if (c == 1) return monomial_latex(e);
  }
  if (p.size() == 2) {
    const auto& [e_lo, c_lo] = *p.terms().begin();
    const auto& [e_hi, c_hi] = *p.terms().rbegin();
    if (e_lo == -e_hi && c_lo == -1 && c_hi == 1) {
      return "[ " + monomial_latex(e_hi) + " ]";
    }
  }
  return to_string(p);
}

inline std::string pmatrix(const SquareMatrix<std::string>& cells) {
  std::string out = "\\begin{pmatrix}\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (j > 0) out += " & ";
      out += cells(i, j);
    }
    out += i + 1 < cells.size() ? " \\\\\n" : "\n";
  }
  out += "\\end{pmatrix}\n";
  return out;
}

inline std::string to_latex(const SquareMatrix<LinearForm>& m) {
  return pmatrix(m.map([](const LinearForm& f) { return f.to_latex(); }));
}

inline std::string to_latex(const SquareMatrix<LaurentPoly>& m) {
  return pmatrix(m.map([](const LaurentPoly& p) { return poly_latex(p); }));
}

inline nlohmann::json to_json(const LinearForm& f) {
  return {{"a", 1}, {"b", f.b}, {"c", f.c}, {"x", f.x}, {"y", f.y}};
}

template <class T>
nlohmann::json matrix_to_json(const SquareMatrix<T>& m, std::string_view family) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"n", m.size()}, {"family", family}, {"entries", std::move(rows)}};
}

}  // namespace spiraldet
