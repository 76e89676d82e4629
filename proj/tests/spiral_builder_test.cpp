#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "spiraldet/spiraldet.hpp"

namespace spiraldet {
namespace {

using EV = ExponentVector;

std::string strip_spaces(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

// Rows of M_4 and M_5 as typeset in the source displays.
const std::vector<std::vector<std::string>> kM4 = {
    {"a+4 b+2 c+4 x+5 y", "a+4 b+2 c+4 x+4 y", "a+4 b+2 c+4 x+3 y", "a+4 b+2 c+4 x+2 y"},
    {"a+b+x+2 y", "a+b+x+y", "a+b+x", "a+3 b+2 c+4 x+2 y"},
    {"a+b+c+x+2 y", "a", "a+x", "a+2 b+2 c+4 x+2 y"},
    {"a+b+2 c+x+2 y", "a+b+2 c+2 x+2 y", "a+b+2 c+3 x+2 y", "a+b+2 c+4 x+2 y"}};

const std::vector<std::vector<std::string>> kM5 = {
    {"a+4 b+2 c+4 x+6 y", "a+4 b+2 c+4 x+5 y", "a+4 b+2 c+4 x+4 y", "a+4 b+2 c+4 x+3 y", "a+4 b+2 c+4 x+2 y"},
    {"a+4 b+3 c+4 x+6 y", "a+b+x+2 y", "a+b+x+y", "a+b+x", "a+3 b+2 c+4 x+2 y"},
    {"a+4 b+4 c+4 x+6 y", "a+b+c+x+2 y", "a", "a+x", "a+2 b+2 c+4 x+2 y"},
    {"a+4 b+5 c+4 x+6 y", "a+b+2 c+x+2 y", "a+b+2 c+2 x+2 y", "a+b+2 c+3 x+2 y", "a+b+2 c+4 x+2 y"},
    {"a+4 b+6 c+4 x+6 y", "a+4 b+6 c+5 x+6 y", "a+4 b+6 c+6 x+6 y", "a+4 b+6 c+7 x+6 y", "a+4 b+6 c+8 x+6 y"}};

const std::vector<std::vector<std::string>> kZ4 = {
    {"[ab^4c^2x^4y^5]", "[ab^4c^2x^4y^4]", "[ab^4c^2x^4y^3]", "[ab^4c^2x^4y^2]"},
    {"[abxy^2]", "[abxy]", "[abx]", "[ab^3c^2x^4y^2]"},
    {"[abcxy^2]", "[a]", "[ax]", "[ab^2c^2x^4y^2]"},
    {"[abc^2xy^2]", "[abc^2x^2y^2]", "[abc^2x^3y^2]", "[abc^2x^4y^2]"}};

// Exponents of q in the 4x4 and 5x5 q-spirals.
const std::vector<std::vector<int>> kQ4 = {
    {16, 15, 14, 13}, {5, 4, 3, 12}, {6, 1, 2, 11}, {7, 8, 9, 10}};
const std::vector<std::vector<int>> kQ5 = {{17, 16, 15, 14, 13},
                                           {18, 5, 4, 3, 12},
                                           {19, 6, 1, 2, 11},
                                           {20, 7, 8, 9, 10},
                                           {21, 22, 23, 24, 25}};

template <class Cell, class F>
void expect_grid(const SquareMatrix<Cell>& m,
                 const std::vector<std::vector<std::string>>& want, F&& render) {
  ASSERT_EQ(m.size(), want.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      EXPECT_EQ(strip_spaces(render(m(i, j))), strip_spaces(want[i][j]))
          << "at (" << i + 1 << "," << j + 1 << ")";
    }
  }
}

TEST(SpiralExponents, SingleCell) {
  const auto em = spiral_exponents(1);
  EXPECT_EQ(em.cells(0, 0), StepCounts{});
  EXPECT_TRUE(em.steps.empty());
}

TEST(SpiralExponents, CornerTuples) {
  EXPECT_EQ(spiral_exponents(4).cells(0, 0), (StepCounts{4, 2, 4, 5}));
  EXPECT_EQ(spiral_exponents(5).cells(4, 4), (StepCounts{4, 6, 8, 6}));
}

TEST(SpiralExponents, ZeroSizeRejected) {
  EXPECT_THROW(spiral_exponents(0), DomainError);
}

TEST(SpiralExponents, PathIsBijectiveWithUnitSteps) {
  for (std::size_t n = 1; n <= 64; ++n) {
    const auto em = spiral_exponents(n);
    ASSERT_EQ(em.path.size(), n * n);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::size_t centres = 0;
    for (const Cell& c : em.path) {
      ASSERT_LT(c.row, n);
      ASSERT_LT(c.col, n);
      seen.insert({c.row, c.col});
      if (em.cells(c.row, c.col) == StepCounts{}) ++centres;
    }
    ASSERT_EQ(seen.size(), n * n) << n;
    ASSERT_EQ(centres, 1u) << n;
    for (std::size_t k = 0; k + 1 < em.path.size(); ++k) {
      StepCounts d = em.cells(em.path[k + 1].row, em.path[k + 1].col);
      const StepCounts& s = em.cells(em.path[k].row, em.path[k].col);
      d.b -= s.b, d.c -= s.c, d.x -= s.x, d.y -= s.y;
      StepCounts want;
      switch (em.steps[k]) {
        case Direction::Right: want.x = 1; break;
        case Direction::Up: want.b = 1; break;
        case Direction::Left: want.y = 1; break;
        case Direction::Down: want.c = 1; break;
      }
      ASSERT_EQ(d, want) << "n=" << n << " step " << k;
    }
  }
}

TEST(SpiralExponents, SmallerSpiralIsPrefix) {
  for (std::size_t n = 3; n <= 21; n += 2) {
    const auto big = spiral_exponents(n);
    const auto small = spiral_exponents(n - 2);
    for (std::size_t k = 0; k < small.path.size(); ++k) {
      const Cell& b = big.path[k];
      const Cell& s = small.path[k];
      ASSERT_EQ(b.row, s.row + 1);
      ASSERT_EQ(b.col, s.col + 1);
      ASSERT_EQ(big.cells(b.row, b.col), small.cells(s.row, s.col));
    }
  }
}

TEST(BuildAdditive, MatchesDisplays) {
  auto render = [](const LinearForm& f) { return f.to_latex(); };
  expect_grid(build_additive(4), kM4, render);
  expect_grid(build_additive(5), kM5, render);
  EXPECT_EQ(build_additive(1)(0, 0).to_latex(), "a");
}

TEST(BuildAdditive, LatexLayout) {
  const std::string tex = to_latex(build_additive(4));
  EXPECT_EQ(tex.rfind("\\begin{pmatrix}\n", 0), 0u);
  EXPECT_NE(tex.find("a+4 b+2 c+4 x+5 y & a+4 b+2 c+4 x+4 y"), std::string::npos);
  EXPECT_NE(tex.find("a+b+c+x+2 y & a & a+x & a+2 b+2 c+4 x+2 y \\\\"),
            std::string::npos);
}

TEST(BuildQPower, MatchesQSpiralAtUnitExponents) {
  for (const auto& [n, want] : {std::pair{4, kQ4}, std::pair{5, kQ5}}) {
    const auto q = build_qpower(n);
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = 0; j < q.size(); ++j) {
        ASSERT_EQ(q(i, j).size(), 1u);
        const EV& e = q(i, j).terms().begin()->first;
        std::int64_t total = 0;
        for (auto d : e.doubled) total += d / 2;
        EXPECT_EQ(total, want[i][j]) << n << " at " << i << "," << j;
      }
    }
  }
}

TEST(BuildQPower, TwoByTwoEntries) {
  const auto q = build_qpower(2);
  EXPECT_EQ(q(1, 0), parse_poly("a"));
  EXPECT_EQ(q(1, 1), parse_poly("a*x"));
  EXPECT_EQ(q(0, 1), parse_poly("a*b*x"));
  EXPECT_EQ(q(0, 0), parse_poly("a*b*x*y"));
  EXPECT_EQ(build_qpower(4)(0, 0), parse_poly("a*b^4*c^2*x^4*y^5"));
}

TEST(BuildBracket, MatchesZ4Display) {
  expect_grid(build_bracket(4), kZ4, [](const LaurentPoly& p) { return poly_latex(p); });
  EXPECT_EQ(build_bracket(1)(0, 0), parse_poly("a - a^-1"));
}

TEST(BuildBracket, TiedMergesHorizontalSteps) {
  const auto z = build_bracket(4, Horizontal::Tied);
  EXPECT_EQ(z(0, 0), bracket(EV::integral(1, 4, 2, 9, 0)));
  EXPECT_EQ(z(1, 1), bracket(EV::integral(1, 1, 0, 2, 0)));
}

TEST(BuildGeneralized, PlainIncrementsGiveTiedBracket) {
  for (std::size_t n = 1; n <= 7; ++n) {
    EXPECT_EQ(build_generalized_bracket(plain_generalized_spec(n)),
              build_bracket(n, Horizontal::Tied));
  }
}

TEST(BuildGeneralized, TwoByTwoWithCubedUpStep) {
  SpiralSpec spec{2, Family::GeneralizedBracket, {EV::of(Var::b, 3)}, {}};
  const auto z = build_generalized_bracket(spec);
  EXPECT_EQ(z(1, 0), bracket(EV::integral(1, 0, 0, 0, 0)));
  EXPECT_EQ(z(1, 1), bracket(EV::integral(1, 0, 0, 1, 0)));
  EXPECT_EQ(z(0, 1), bracket(EV::integral(1, 3, 0, 1, 0)));
  EXPECT_EQ(z(0, 0), bracket(EV::integral(1, 3, 0, 2, 0)));
}

TEST(BuildGeneralized, WrongIncrementCount) {
  SpiralSpec spec = plain_generalized_spec(4);
  spec.up_increments.pop_back();
  EXPECT_THROW(build_generalized_bracket(spec), LengthMismatch);
  spec = plain_generalized_spec(3);
  spec.family = Family::Bracket;
  EXPECT_THROW(build_generalized_bracket(spec), DomainError);
}

TEST(SpecializeAdditive, InwardAndOutwardPatterns) {
  const Rational m(-1), one(1);
  const auto inward = specialize_additive(4, {16, m, m, m, m});
  const auto outward = specialize_additive(4, {one, one, one, one, one});
  for (std::size_t j = 0; j < 4; ++j) {
    EXPECT_EQ(inward(0, j), static_cast<long>(j + 1));
    EXPECT_EQ(outward(0, j), static_cast<long>(16 - j));
  }
  // Inward pattern ends at the centre with n^2.
  EXPECT_EQ(inward(2, 1), 16);
  EXPECT_EQ(specialize_additive(1, {one, 7, 8, 9, 10})(0, 0), 1);
}

TEST(SpecializeAdditive, CommutesWithEvaluation) {
  SplitMix64 rng(3);
  for (std::size_t n = 1; n <= 8; ++n) {
    std::array<Rational, kNumVars> v;
    for (auto& c : v) c = make_rational(rng.nonzero(20), rng.uniform(1, 6));
    const auto num = specialize_additive(n, v);
    const auto sym = build_additive_poly(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        ASSERT_EQ(num(i, j), evaluate(sym(i, j), EvalPoint(v)));
      }
    }
  }
}

TEST(MatrixJson, Shape) {
  const auto j = matrix_to_json(build_additive(2), "additive");
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["family"], "additive");
  EXPECT_EQ(j["entries"][1][0], (nlohmann::json{{"a", 1}, {"b", 0}, {"c", 0}, {"x", 0}, {"y", 0}}));
}

}  // namespace
}  // namespace spiraldet
