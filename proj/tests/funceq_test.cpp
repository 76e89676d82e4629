#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "spiraldet/funceq.hpp"

namespace spiraldet::funceq {
namespace {

constexpr double kTight = 1e-12;

TEST(EvalG, KnownValues) {
  EXPECT_EQ(eval_g(FamilySpec::power(0), 5), 2);
  EXPECT_NEAR(static_cast<double>(eval_g(FamilySpec::power(1), 3)), 10.0 / 3, kTight);
  EXPECT_NEAR(static_cast<double>(eval_g(FamilySpec::imaginary_power(0.7L), 1)), 2, kTight);
  EXPECT_EQ(eval_g(FamilySpec::log_affine(1, 2), 7), 2);
}

TEST(EvalF, KnownValues) {
  EXPECT_EQ(eval_f(FamilySpec::zero(), 4), 0);
  EXPECT_NEAR(static_cast<double>(eval_f(FamilySpec::log_affine(1, 2), std::exp(1.0L))), 3, kTight);
  EXPECT_NEAR(static_cast<double>(eval_f(FamilySpec::power(1, 1, 1), 2)), 2.5, kTight);
}

TEST(Eval, NonPositiveArgument) {
  EXPECT_THROW(eval_g(FamilySpec::power(1), 0), DomainError);
  EXPECT_THROW(eval_f(FamilySpec::power(1), -1), DomainError);
}

TEST(Relations, HandComputedPoints) {
  const FamilySpec s = FamilySpec::power(1, 1, -1);
  auto f = [&](Real t) { return eval_f(s, t); };
  auto g = [&](Real t) { return eval_g(s, t); };
  EXPECT_NEAR(static_cast<double>(f(2) * g(3)), 5, kTight);
  EXPECT_NEAR(static_cast<double>(f(6) + f(2.0L / 3)), 5, kTight);
  EXPECT_NEAR(static_cast<double>(residual(Relation::R6_1, f, g, 2, 3)), 0, kTight);
  EXPECT_NEAR(static_cast<double>(g(2) * g(3)), 25.0 / 3, kTight);
  EXPECT_NEAR(static_cast<double>(residual(Relation::R6_17, f, g, 2, 3)), 0, kTight);
}

TEST(Relations, ConstantTwoSatisfiesSquaring) {
  const auto r = check_relation(FamilySpec::log_affine(0, 1), Relation::R6_15, 200, 1);
  EXPECT_EQ(r.max_residual, 0);
}

TEST(Relations, AllFamiliesPass) {
  const FamilySpec specs[] = {FamilySpec::power(0),       FamilySpec::power(1),
                              FamilySpec::power(2.5L),    FamilySpec::power(0.5L, 3, 2),
                              FamilySpec::imaginary_power(1.3L, 1, 0.5L),
                              FamilySpec::imaginary_power(0.3L),
                              FamilySpec::log_affine(1, 2), FamilySpec::zero()};
  for (const auto& s : specs) {
    for (Relation r : kAllRelations) {
      if (s.kind == Kind::Zero && r != Relation::R6_1) continue;
      const auto rep = check_relation(s, r, 1000, 5);
      EXPECT_LT(rep.max_residual, kDefaultTolerance)
          << relation_id(r) << " alpha=" << static_cast<double>(s.alpha);
      EXPECT_EQ(rep.samples, 1000u);
    }
  }
}

TEST(Relations, BrokenFunctionIsDetected) {
  const RealFunction g = [](Real x) { return x * x + 1 / x; };
  const auto rep = check_functions(Relation::R6_14, g, g, 100, 2);
  EXPECT_GT(rep.max_residual, 1);
  ASSERT_EQ(rep.argmax.size(), 1u);
  EXPECT_GE(rep.argmax[0], 0.1L);
  EXPECT_LE(rep.argmax[0], 10.0L);
}

TEST(Relations, IndependentArithmetic) {
  // Doubles straight from the formula, no library code.
  for (double alpha : {0.0, 1.0, 2.5}) {
    for (double a : {0.2, 1.7, 9.1}) {
      for (double x : {0.15, 3.3}) {
        const double lhs = oracle::g_power(alpha, a) * oracle::g_power(alpha, x);
        const double rhs = oracle::g_power(alpha, a * x) + oracle::g_power(alpha, a / x);
        const double lib = static_cast<double>(
            eval_g(FamilySpec::power(alpha), a) * eval_g(FamilySpec::power(alpha), x));
        EXPECT_NEAR(lhs, rhs, 1e-9 * std::max(1.0, std::fabs(lhs)));
        EXPECT_NEAR(lhs, lib, 1e-9 * std::max(1.0, std::fabs(lhs)));
      }
    }
  }
}

TEST(Relations, ParseAndUnknown) {
  EXPECT_EQ(parse_relation("6.15"), Relation::R6_15);
  EXPECT_EQ(relation_id(Relation::R6_1), "6.1");
  EXPECT_THROW(parse_relation("6.2"), UnknownRelation);
  EXPECT_THROW(check_relation(FamilySpec::zero(), "nope", 10, 0), UnknownRelation);
}

TEST(Relations, ReportJson) {
  const auto j = to_json(check_relation(FamilySpec::power(1), Relation::R6_15, 10, 3));
  EXPECT_EQ(j["relation"], "6.15");
  EXPECT_EQ(j["samples"], 10);
  EXPECT_EQ(j["argmax"].size(), 1u);
}

TEST(GAtOne, IsTwo) {
  for (const auto& s : {FamilySpec::power(0.4L), FamilySpec::imaginary_power(2),
                        FamilySpec::log_affine(3, 4)}) {
    EXPECT_NEAR(static_cast<double>(eval_g(s, 1)), 2, kTight);
  }
}

TEST(Classify, RealExponent) {
  const FamilySpec fit = classify([](Real x) { return x * x + 1 / (x * x); }, 500, 1);
  EXPECT_EQ(fit.kind, Kind::PowerSymmetric);
  EXPECT_FALSE(fit.imaginary);
  EXPECT_NEAR(static_cast<double>(fit.alpha), 2, 1e-12);
}

TEST(Classify, ConstantTwo) {
  const FamilySpec fit = classify([](Real) { return Real(2); }, 100, 1);
  EXPECT_EQ(fit.kind, Kind::LogAffine);
  EXPECT_EQ(fit.alpha, 0);
}

TEST(Classify, ImaginaryExponent) {
  const FamilySpec fit =
      classify([](Real x) { return 2 * std::cos(1.3L * std::log(x)); }, 500, 1);
  EXPECT_TRUE(fit.imaginary);
  EXPECT_NEAR(static_cast<double>(fit.alpha), 1.3, 1e-9);
}

TEST(Classify, RecoversMagnitude) {
  for (Real alpha : {0.0L, 0.5L, 1.0L, 2.5L, -1.5L}) {
    const FamilySpec s = FamilySpec::power(alpha);
    const FamilySpec fit = classify([&](Real x) { return eval_g(s, x); }, 1000, 4);
    EXPECT_NEAR(static_cast<double>(fit.alpha), std::fabs(static_cast<double>(alpha)), 1e-9);
    EXPECT_LT(check_relation(fit, Relation::R6_17, 1000, 9).max_residual, kDefaultTolerance);
  }
  for (Real t : {0.3L, 1.3L}) {
    const FamilySpec s = FamilySpec::imaginary_power(t);
    const FamilySpec fit = classify([&](Real x) { return eval_g(s, x); }, 1000, 4);
    EXPECT_TRUE(fit.imaginary);
    EXPECT_NEAR(static_cast<double>(fit.alpha), static_cast<double>(t), 1e-9);
  }
}

TEST(Classify, RejectsOutsideFamilies) {
  EXPECT_THROW(classify([](Real) { return Real(-3); }, 10, 1), Unclassifiable);
  EXPECT_THROW(classify([](Real x) { return 2 + std::log(x) * std::log(x); }, 100, 1),
               Unclassifiable);
}

}  // namespace
}  // namespace spiraldet::funceq
