#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spiraldet/spiraldet.hpp"

namespace spiraldet {
namespace {

class ClosedFormBySize : public ::testing::TestWithParam<int> {};

TEST_P(ClosedFormBySize, AdditiveMatchesCofactor) {
  const auto n = static_cast<std::size_t>(GetParam());
  EXPECT_EQ(det_cofactor(build_additive_poly(n)), closed_form(Theorem::Additive, n));
}

TEST_P(ClosedFormBySize, QPowerMatchesCofactor) {
  const auto n = static_cast<std::size_t>(GetParam());
  EXPECT_EQ(det_cofactor(build_qpower(n)), closed_form(Theorem::QPower, n));
}

TEST_P(ClosedFormBySize, BracketMatchesCofactor) {
  const auto n = static_cast<std::size_t>(GetParam());
  const LaurentPoly f = closed_form(Theorem::Bracket, n);
  EXPECT_FALSE(f.has_half_exponents());
  EXPECT_EQ(det_cofactor(build_bracket(n, Horizontal::Tied)), f);
}

INSTANTIATE_TEST_SUITE_P(Sizes, ClosedFormBySize, ::testing::Range(1, 7));

TEST(AdditiveClosedForm, SizeTwoExpansion) {
  EXPECT_EQ(thm1_even(1), parse_poly("a*x + b*x + x^2 + a*y + x*y"));
  EXPECT_EQ(thm1_even(0), LaurentPoly(1L));
  EXPECT_EQ(thm1_odd(0), LaurentPoly::variable(Var::a));
}

TEST(AdditiveClosedForm, SizeTwoInwardValue) {
  const Rational m(-1);
  EXPECT_EQ(evaluate_polynomial(thm1_even(1), {4, m, m, m, m}), -5);
  const SquareMatrix<Rational> direct{{1, 2}, {4, 3}};
  EXPECT_EQ(oracle::leibniz_det(direct), -5);
}

TEST(AdditiveClosedForm, SizeThreeAllOnes) {
  const Rational one(1);
  EXPECT_EQ(evaluate_polynomial(thm1_odd(1), {one, one, one, one, one}),
            det_bareiss_rational(specialize_additive(3, {one, one, one, one, one})));
}

TEST(AdditiveClosedForm, SpecializationsMatchBareiss) {
  const Rational m(-1), one(1);
  for (std::size_t n = 1; n <= 10; ++n) {
    const FactoredForm f = closed_form_factors(Theorem::Additive, n);
    const std::array<Rational, kNumVars> inward{Rational(static_cast<long>(n * n)), m, m, m, m};
    const std::array<Rational, kNumVars> ones{one, one, one, one, one};
    EXPECT_EQ(f.evaluate_polynomial(inward), det_bareiss_rational(specialize_additive(n, inward))) << n;
    EXPECT_EQ(f.evaluate_polynomial(ones), det_bareiss_rational(specialize_additive(n, ones))) << n;
  }
}

TEST(QPowerClosedForm, SmallCases) {
  EXPECT_EQ(thm2_odd(0), LaurentPoly::variable(Var::a));
  EXPECT_EQ(thm2_even(1), parse_poly("-a^2*b*x + a^2*b*x^2*y"));
}

TEST(QPowerClosedForm, QSpiralFourAtQEqualsTwo) {
  // Every variable set to q = 2 gives the numeric q-spiral.
  const std::array<Rational, kNumVars> q{2, 2, 2, 2, 2};
  const Rational closed = evaluate(thm2_even(2), EvalPoint(q));
  SquareMatrix<Rational> direct(4);
  const int exps[4][4] = {{16, 15, 14, 13}, {5, 4, 3, 12}, {6, 1, 2, 11}, {7, 8, 9, 10}};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) direct(i, j) = pow(Rational(2), exps[i][j]);
  }
  EXPECT_EQ(closed, oracle::leibniz_det(direct));
  EXPECT_EQ(closed, Rational("-3243824381952"));
}

TEST(BracketClosedForm, SmallCases) {
  EXPECT_EQ(thm3_odd(0), parse_poly("a - a^-1"));
  EXPECT_EQ(thm3_even(1), det_cofactor(build_bracket(2, Horizontal::Tied)));
  EXPECT_EQ(thm3_odd(1), det_cofactor(build_bracket(3, Horizontal::Tied)));
}

TEST(BracketClosedForm, TermCounts) {
  const std::size_t want[] = {2, 4, 16, 64, 240, 832};
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(closed_form(Theorem::Bracket, n).size(), want[n - 1]) << n;
  }
}

TEST(BracketClosedForm, FactorsCarryHalfExponents) {
  const FactoredForm f = closed_form_factors(Theorem::Bracket, 4);
  bool any_half = false;
  for (const auto& p : f.factors) any_half = any_half || p.has_half_exponents();
  EXPECT_TRUE(any_half);
  EXPECT_FALSE(f.expand().has_half_exponents());
}

TEST(FactoredForm, EvaluateMatchesExpansion) {
  for (auto t : {Theorem::Additive, Theorem::QPower, Theorem::Bracket}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      const FactoredForm f = closed_form_factors(t, n);
      const EvalPoint pt = sample_point(17, n, f.half_exponent_vars());
      EXPECT_EQ(f.evaluate(pt), evaluate(f.expand(), pt));
    }
  }
}

TEST(RandomizedClosedForms, LargerSizes) {
  for (auto t : {Theorem::Additive, Theorem::QPower, Theorem::Bracket}) {
    for (std::size_t n = 7; n <= 9; ++n) {
      const auto r = verify_theorem_random(t, n, 4, 1234);
      EXPECT_TRUE(r.ok()) << static_cast<int>(t) << " n=" << n;
    }
  }
}

TEST(Reduction, OddStepSizeThree) {
  const ReductionData r = reduce_odd(1);
  EXPECT_EQ(r.size, 3u);
  EXPECT_EQ(r.difference, parse_poly("b + 2*c + 2*x + 2*y"));
  EXPECT_EQ(r.up, parse_poly("2*b + 2*c + 2*x + 2*y"));
  EXPECT_EQ(r.down, parse_poly("-b - c - 2*x - 2*y"));
  EXPECT_EQ(r.scalar_factor, parse_poly("c"));
  EXPECT_EQ(r.border.size(), 7u);
}

TEST(Reduction, EvenStepSizeTwo) {
  const ReductionData r = reduce_even(1);
  EXPECT_EQ(r.size, 2u);
  EXPECT_EQ(r.up, parse_poly("-x - y"));
  EXPECT_EQ(r.down, parse_poly("b + c + x + y"));
  EXPECT_EQ(r.difference, parse_poly("b + x + y"));
  EXPECT_EQ(r.scalar_factor, parse_poly("-b"));
}

TEST(Reduction, ScalarFactorIsPivot) {
  for (std::int64_t n = 1; n <= 4; ++n) {
    EXPECT_EQ(reduce_odd(n).scalar_factor, LaurentPoly::variable(Var::c));
    EXPECT_EQ(reduce_even(n).scalar_factor, -LaurentPoly::variable(Var::b));
  }
}

TEST(Reduction, RecurrencesHold) {
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (const ReductionData& r : {reduce_odd(n), reduce_even(n)}) {
      EXPECT_TRUE(check_recurrence(r, 50, 8).ok()) << r.size;
      EXPECT_TRUE(check_recurrence_closed_form(r, 50, 8).ok()) << r.size;
    }
  }
}

TEST(Reduction, RejectsNonPositive) {
  EXPECT_THROW(reduce_odd(0), DomainError);
  EXPECT_THROW(reduce_even(0), DomainError);
}

TEST(QReduction, BoundaryRowsCollapse) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto r = qreduction_check(n);
    EXPECT_TRUE(r.ok()) << n;
    EXPECT_GT(r.trials, 0u);
  }
}

}  // namespace
}  // namespace spiraldet
