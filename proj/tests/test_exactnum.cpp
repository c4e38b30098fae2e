#include "knotproj/exactnum.hpp"
#include "knotproj/knots.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace knotproj;

namespace {

StepFunction sig(std::int64_t m) { return torus_signature(m); }

}  // namespace

TEST(Rational, ReducedOnConstruction) {
  const Rational r = make_rational(6, -4);
  EXPECT_EQ(boost::multiprecision::numerator(r), -3);
  EXPECT_EQ(boost::multiprecision::denominator(r), 2);
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Rational, FloorRoundsDown) {
  EXPECT_EQ(knotproj::floor(make_rational(7, 2)), 3);
  EXPECT_EQ(knotproj::floor(make_rational(-7, 2)), -4);
  EXPECT_EQ(knotproj::floor(Rational(-3)), -3);
}

TEST(StepFunction, ConstructionValidates) {
  EXPECT_THROW(StepFunction({make_rational(1, 2)}, {1}), std::invalid_argument);
  EXPECT_THROW(StepFunction({Rational(0)}, {1, 2}), std::invalid_argument);
  EXPECT_THROW(StepFunction({make_rational(1, 2), make_rational(1, 3)}, {1, 2, 3}), std::invalid_argument);
}

TEST(StepFunction, EqualNeighboursMerge) {
  const StepFunction f({make_rational(1, 4), make_rational(1, 2)}, {1, 1, 2});
  EXPECT_EQ(f.breakpoints(), std::vector<Rational>{make_rational(1, 2)});
  EXPECT_EQ(f.values(), (std::vector<std::int64_t>{1, 2}));
}

TEST(StepFunction, AddZeroIsIdentity) {
  const StepFunction g = sig(4);
  EXPECT_EQ(StepFunction{} + g, g);
}

TEST(StepFunction, DoublingTrefoil) {
  const StepFunction f = sig(1) + sig(1);
  EXPECT_EQ(f.breakpoints(), std::vector<Rational>{make_rational(1, 3)});
  EXPECT_EQ(f.values(), (std::vector<std::int64_t>{0, 2}));
}

TEST(StepFunction, ThirteenMinusFourTrefoils) {
  const StepFunction f = sig(6) + (-4) * sig(1);
  const std::vector<Rational> bps{make_rational(1, 13), make_rational(3, 13), make_rational(1, 3), make_rational(5, 13),
                                  make_rational(7, 13), make_rational(9, 13), make_rational(11, 13)};
  EXPECT_EQ(f.breakpoints(), bps);
  EXPECT_EQ(f.values(), (std::vector<std::int64_t>{0, 1, 2, -2, -1, 0, 1, 2}));
  // Pointwise oracle at midpoints of the refined partition.
  for (std::size_t i = 0; i < f.interval_count(); ++i) {
    const Rational t = f.interval_sample(i);
    EXPECT_EQ(f.evaluate(t), oracle::torus_signature_at(6, t) - 4 * oracle::torus_signature_at(1, t));
  }
  EXPECT_EQ(f.sup_abs(), 2);
}

TEST(StepFunction, Scale) {
  const StepFunction f = sig(3);
  EXPECT_EQ(1 * f, f);
  EXPECT_EQ((-1 * f).values(), (std::vector<std::int64_t>{0, -1, -2, -3}));
  const StepFunction g = 4 * sig(1);
  EXPECT_EQ(g.breakpoints(), std::vector<Rational>{make_rational(1, 3)});
  EXPECT_EQ(g.evaluate(make_rational(1, 4)), 0);
  EXPECT_EQ(g.evaluate(make_rational(1, 2)), 4);
  EXPECT_TRUE((0 * f).is_zero());
  EXPECT_TRUE((0 * f).breakpoints().empty());
}

TEST(StepFunction, SupAbs) {
  EXPECT_EQ(StepFunction{}.sup_abs(), 0);
  EXPECT_EQ(sig(3).sup_abs(), 3);
}

TEST(StepFunction, EvaluateAveragesAtBreakpoints) {
  EXPECT_EQ(sig(1).evaluate(make_rational(1, 2)), 1);
  EXPECT_EQ(sig(1).evaluate(make_rational(1, 3)), make_rational(1, 2));
  EXPECT_EQ(sig(2).evaluate(make_rational(1, 5)), make_rational(1, 2));
  EXPECT_EQ(sig(2).evaluate(Rational(1)), 2);
}

TEST(StepFunction, EvaluateDomain) {
  EXPECT_THROW(sig(1).evaluate(Rational(0)), std::domain_error);
  EXPECT_THROW(sig(1).evaluate(make_rational(-1, 2)), std::domain_error);
  EXPECT_THROW(sig(1).evaluate(make_rational(3, 2)), std::domain_error);
}

TEST(StepFunctionProperty, AdditionCommutesAndAssociates) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const StepFunction f = oracle::random_step(rng), g = oracle::random_step(rng), h = oracle::random_step(rng);
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ((f + g) + h, f + (g + h));
  }
}

TEST(StepFunctionProperty, NegationCancels) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    const StepFunction f = oracle::random_step(rng);
    EXPECT_TRUE((scale(f, -1) + f).is_zero());
  }
}

TEST(StepFunctionProperty, SupAbsSubadditive) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const StepFunction f = oracle::random_step(rng), g = oracle::random_step(rng);
    EXPECT_LE((f + g).sup_abs(), f.sup_abs() + g.sup_abs());
  }
}

TEST(StepFunctionProperty, CanonicalFormIsIdempotent) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 300; ++i) {
    const StepFunction f = oracle::random_step(rng) + oracle::random_step(rng);
    const StepFunction again(f.breakpoints(), f.values());
    EXPECT_EQ(again, f);
    for (std::size_t j = 1; j < f.values().size(); ++j) EXPECT_NE(f.values()[j], f.values()[j - 1]);
  }
}

TEST(StepFunctionProperty, TorusEvaluationMatchesDenseFormula) {
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<std::int64_t> mdist(1, 30);
  for (int i = 0; i < 10000; ++i) {
    const std::int64_t m = mdist(rng);
    // Mix random points with exact breakpoints.
    Rational t = oracle::random_rational_in_unit(rng);
    if (i % 5 == 0) {
      const std::int64_t j = std::uniform_int_distribution<std::int64_t>(1, m)(rng);
      t = make_rational(2 * j - 1, 2 * m + 1);
    }
    ASSERT_EQ(sig(m).evaluate(t), oracle::torus_signature_at(m, t)) << "m=" << m << " t=" << t;
  }
}
