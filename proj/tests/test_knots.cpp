#include "knotproj/knots.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace knotproj;

namespace {

KnotCombo T(std::int64_t q, std::int64_t c = 1) { return KnotCombo(Generator::torus_q(q), c); }

}  // namespace

TEST(TorusSignature, Trefoil) {
  const StepFunction f = torus_signature(1);
  EXPECT_EQ(f.breakpoints(), std::vector<Rational>{make_rational(1, 3)});
  EXPECT_EQ(f.values(), (std::vector<std::int64_t>{0, 1}));
}

TEST(TorusSignature, SevenCrossing) {
  const StepFunction f = torus_signature(3);
  EXPECT_EQ(f.breakpoints(), (std::vector<Rational>{make_rational(1, 7), make_rational(3, 7), make_rational(5, 7)}));
  EXPECT_EQ(f.values(), (std::vector<std::int64_t>{0, 1, 2, 3}));
}

TEST(TorusSignature, ZeroBelowFirstJump) {
  for (std::int64_t m = 1; m <= 20; ++m) EXPECT_EQ(torus_signature(m).evaluate(make_rational(1, 2 * m + 2)), 0);
  EXPECT_THROW(torus_signature(0), std::domain_error);
}

TEST(ComboSignature, Examples) {
  EXPECT_TRUE(combo_signature(KnotCombo{}).is_zero());
  EXPECT_EQ(combo_signature(T(23) - T(7, 3)).sup_abs(), 2);
  EXPECT_EQ(combo_signature(T(17, 2) - T(11, 3)).sup_abs(), 2);
  EXPECT_THROW(combo_signature(KnotCombo(Generator::twist(2))), UnsupportedGenerator);
}

TEST(SharpS, Examples) {
  EXPECT_EQ(sharp_S(KnotCombo{}), 0);
  EXPECT_EQ(sharp_S(T(91) - T(41, 2)), 5);
  EXPECT_EQ(sharp_S(T(41, 3) - T(61, 2)), 2);
}

TEST(DoubleFloor, Examples) {
  EXPECT_EQ(double_floor(make_rational(7, 2)), 3);
  EXPECT_EQ(double_floor(Rational(3)), 2);
  EXPECT_EQ(double_floor(make_rational(-3, 2)), -2);
  EXPECT_EQ(double_floor(Rational(0)), -1);
}

TEST(JumpValues, ValueAtOne) {
  EXPECT_EQ(corollary_jump_values(3, 11, 3, 1).at_one, 2);
}

TEST(JumpValues, SignedProbeValues) {
  // The three probes for 2 T(2,17) - 3 T(2,11); their absolute values are
  // the max{b, |8b - 5a|, |7b - 5a|} terms at (a, b) = (3, 2).
  const JumpValues v = corollary_jump_values(5, 8, 3, 2);
  EXPECT_EQ(v, (JumpValues{2, 1, -1}));
  EXPECT_EQ(std::llabs(v.below_first_jump), 2);
  EXPECT_EQ(std::llabs(v.at_one), std::llabs(8 * 2 - 5 * 3));
  EXPECT_EQ(std::llabs(v.above_last_jump), std::llabs(7 * 2 - 5 * 3));
}

TEST(JumpValues, BelowFirstJump) {
  EXPECT_EQ(corollary_jump_values(1, 6, 4, 1).below_first_jump, 2);
}

TEST(JumpValues, Preconditions) {
  EXPECT_THROW(corollary_jump_values(3, 3, 1, 1), std::domain_error);
  EXPECT_THROW(corollary_jump_values(3, 5, 0, 1), std::domain_error);
  EXPECT_THROW(corollary_jump_values(3, 5, 1, -1), std::domain_error);
}

TEST(TwistJumpCosine, Values) {
  EXPECT_EQ(twist_jump_cosine(1), make_rational(1, 2));
  EXPECT_EQ(twist_jump_cosine(2), make_rational(3, 4));
  std::set<Rational> seen;
  for (std::int64_t n = 1; n <= 100; ++n) EXPECT_TRUE(seen.insert(twist_jump_cosine(n)).second);
  EXPECT_THROW(twist_jump_cosine(0), std::domain_error);
}

TEST(Parser, Grammar) {
  EXPECT_EQ(parse_combo("2*T(2,17) - 3*T(2,11)"), T(17, 2) - T(11, 3));
  EXPECT_EQ(parse_combo("  T( 2 , 3 )+T(2,3)"), T(3, 2));
  EXPECT_EQ(parse_combo("-T(2,5)"), T(5, -1));
  EXPECT_EQ(parse_combo("W(3) + T(2,5)"), KnotCombo(Generator::twist(3)) + T(5));
  EXPECT_EQ(parse_combo("0"), KnotCombo{});
  EXPECT_EQ(parse_combo("T(2,5) - T(2,5)"), KnotCombo{});
}

TEST(Parser, ErrorsCarryPositions) {
  auto pos = [](const char* s) {
    try {
      parse_combo(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  EXPECT_EQ(pos("T(2,4)"), 4);
  EXPECT_EQ(pos("T(2,1)"), 4);
  EXPECT_EQ(pos("2*X(2,3)"), 2);
  EXPECT_EQ(pos("T(2,3) T(2,5)"), 7);
  EXPECT_EQ(pos("T(3,5)"), 2);
  EXPECT_EQ(pos(""), 0);
  EXPECT_EQ(pos("W(0)"), 2);
}

TEST(Parser, RoundTrip) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const KnotCombo c = oracle::random_torus_combo(rng, 30, 5);
    EXPECT_EQ(parse_combo(c.to_string()), c) << c.to_string();
  }
}

TEST(KnotsProperty, SignatureIsHomomorphism) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 300; ++i) {
    const KnotCombo a = oracle::random_torus_combo(rng, 30, 5), b = oracle::random_torus_combo(rng, 30, 5);
    EXPECT_EQ(combo_signature(a + b), combo_signature(a) + combo_signature(b));
  }
}

TEST(KnotsProperty, MirrorKeepsSharpS) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const KnotCombo c = oracle::random_torus_combo(rng, 30, 5);
    EXPECT_EQ(sharp_S(c), sharp_S(-c));
  }
}

TEST(KnotsProperty, GeneratorSharpSEqualsSeifertGenus) {
  for (std::int64_t m = 1; m <= 60; ++m) {
    const KnotCombo c = KnotCombo::torus(m);
    EXPECT_EQ(sharp_S(c), m);
    EXPECT_EQ(c.seifert_genus(), m);
  }
}

TEST(KnotsProperty, FirstProbeIsBTimesJumpCount) {
  for (std::int64_t k = 1; k <= 12; ++k)
    for (std::int64_t n = k + 1; n <= 40; ++n) {
      const std::int64_t j1 = jumps_below(k, n);
      EXPECT_GE(j1, 1);
      for (std::int64_t b = 1; b <= 3; ++b)
        for (std::int64_t a = 1; a <= 4; ++a) {
          const JumpValues v = corollary_jump_values(k, n, a, b);
          EXPECT_EQ(v.below_first_jump, b * j1);
          EXPECT_EQ(v.at_one, b * n - a * k);
        }
    }
}
