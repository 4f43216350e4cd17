#include <gtest/gtest.h>

#include <rcong/rcong.hpp>

#include "brute.hpp"

using rcong::Integer;
using rcong::remainder_convention;
using rcong::triviality;

namespace {

rcong::modulus<Integer> mod(long long m) {
  return rcong::modulus<Integer>(Integer(m));
}

// =============================================================================
// Modulus construction
// =============================================================================

TEST(Modulus, NormalizesNegativeValues) {
  EXPECT_EQ(mod(-5).value(), Integer(5));
  EXPECT_EQ(mod(1).value(), Integer(1));
}

TEST(Modulus, RejectsZero) {
  EXPECT_THROW(mod(0), std::invalid_argument);
}

// =============================================================================
// div_rem
// =============================================================================

TEST(DivRem, LeastNonNegativeExamples) {
  auto [q1, r1] = div_rem(Integer(13), mod(5));
  EXPECT_EQ(q1, Integer(2));
  EXPECT_EQ(r1, Integer(3));

  auto [q2, r2] = div_rem(Integer(-7), mod(4));
  EXPECT_EQ(q2, Integer(-2));
  EXPECT_EQ(r2, Integer(1));
}

TEST(DivRem, ZeroDividend) {
  for (long long m = 1; m <= 6; ++m) {
    for (auto conv : {remainder_convention::least_nonnegative,
                      remainder_convention::balanced}) {
      auto [q, r] = div_rem(Integer(0), mod(m), conv);
      EXPECT_EQ(q, Integer(0));
      EXPECT_EQ(r, Integer(0));
    }
  }
}

TEST(DivRem, BalancedExample) {
  auto [q, r] = div_rem(Integer(7), mod(4), remainder_convention::balanced);
  EXPECT_EQ(q, Integer(2));
  EXPECT_EQ(r, Integer(-1));
}

TEST(DivRem, RoundTripAndRangeSweep) {
  for (long long b = -50; b <= 50; ++b) {
    for (long long a = 1; a <= 12; ++a) {
      {
        auto [q, r] = div_rem(Integer(b), mod(a));
        EXPECT_EQ(Integer(b), Integer(a) * q + r);
        EXPECT_GE(r, Integer(0));
        EXPECT_LT(r, Integer(a));
      }
      {
        auto [q, r] =
            div_rem(Integer(b), mod(a), remainder_convention::balanced);
        EXPECT_EQ(Integer(b), Integer(a) * q + r);
        // -a/2 < r <= a/2, kept in integers as -a < 2r <= a
        EXPECT_GT(r * 2, Integer(-a));
        EXPECT_LE(r * 2, Integer(a));
      }
    }
  }
}

// =============================================================================
// is_r_congruent
// =============================================================================

TEST(IsRCongruent, ClosingExample) {
  EXPECT_TRUE(is_r_congruent(Integer(7), Integer(8), Integer(3), mod(4)));
  EXPECT_FALSE(is_r_congruent(Integer(7), Integer(8), Integer(0), mod(4)));
}

TEST(IsRCongruent, ReflexiveAtIndexZero) {
  for (long long x = -6; x <= 6; ++x)
    for (long long m = 1; m <= 6; ++m)
      EXPECT_TRUE(is_r_congruent(Integer(x), Integer(x), Integer(0), mod(m)));
}

TEST(IsRCongruent, ClaimOverloadAgrees) {
  rcong::congruence_claim<Integer> c{Integer(7), Integer(8), Integer(3),
                                     mod(4)};
  EXPECT_TRUE(is_r_congruent(c));
  EXPECT_EQ(is_r_congruent(c),
            is_r_congruent(c.a, c.b, c.r, c.m));
}

TEST(IsRCongruent, LargeMagnitudesStayExact) {
  Integer big = rcong::detail::int_pow(Integer(10), Integer(40));
  // big and big + 3 differ by exactly 3
  EXPECT_TRUE(is_r_congruent(Integer(big + 3), big, Integer(3),
                             rcong::modulus<Integer>(big)));
  EXPECT_TRUE(
      is_r_congruent(Integer(big * 2 + 5), Integer(5), Integer(0),
                     rcong::modulus<Integer>(big)));
}

// Bridging identity: a ≡_r b (mod m) <=> a ≡ b + r (mod m), checked both
// against the remainder form and against the quotient-search oracle.
TEST(IsRCongruent, BridgingIdentitySweep) {
  for (long long m = 1; m <= 8; ++m) {
    for (long long a = -10; a <= 10; ++a) {
      for (long long b = -10; b <= 10; ++b) {
        for (long long r = -10; r <= 10; ++r) {
          bool lib = is_r_congruent(Integer(a), Integer(b), Integer(r),
                                    mod(m));
          bool bridge =
              rcong::detail::mod_floor(Integer(a - (b + r)), Integer(m)) ==
              Integer(0);
          bool oracle = brute::cong_by_quotient_search(a, b, r, m);
          EXPECT_EQ(lib, bridge) << a << " " << b << " " << r << " " << m;
          EXPECT_EQ(lib, oracle) << a << " " << b << " " << r << " " << m;
        }
      }
    }
  }
}

TEST(IsRCongruent, SymmetrySweep) {
  for (long long m = 1; m <= 6; ++m)
    for (long long a = -6; a <= 6; ++a)
      for (long long b = -6; b <= 6; ++b)
        for (long long r = -6; r <= 6; ++r)
          EXPECT_EQ(
              is_r_congruent(Integer(a), Integer(b), Integer(r), mod(m)),
              is_r_congruent(Integer(b), Integer(a), Integer(-r), mod(m)));
}

TEST(IsRCongruent, TransitivitySweep) {
  for (long long m = 1; m <= 5; ++m)
    for (long long a = -5; a <= 5; ++a)
      for (long long b = -5; b <= 5; ++b)
        for (long long c = -5; c <= 5; ++c)
          for (long long r1 = -5; r1 <= 5; ++r1)
            for (long long r2 = -5; r2 <= 5; ++r2) {
              if (!is_r_congruent(Integer(a), Integer(b), Integer(r1),
                                  mod(m)) ||
                  !is_r_congruent(Integer(b), Integer(c), Integer(r2),
                                  mod(m)))
                continue;
              EXPECT_TRUE(is_r_congruent(Integer(a), Integer(c),
                                         Integer(r1 + r2), mod(m)));
            }
}

// =============================================================================
// canonical_r
// =============================================================================

TEST(CanonicalR, Examples) {
  EXPECT_EQ(canonical_r(Integer(7), Integer(8), mod(4)), Integer(3));
  EXPECT_EQ(canonical_r(Integer(10), Integer(1), mod(5)), Integer(4));
  for (long long x = -4; x <= 4; ++x)
    EXPECT_EQ(canonical_r(Integer(x), Integer(x), mod(7)), Integer(0));
}

TEST(CanonicalR, ProducesACongruentIndexInRange) {
  for (long long m = 1; m <= 8; ++m) {
    for (long long a = -9; a <= 9; ++a) {
      for (long long b = -9; b <= 9; ++b) {
        Integer r0 = canonical_r(Integer(a), Integer(b), mod(m));
        EXPECT_TRUE(is_r_congruent(Integer(a), Integer(b), r0, mod(m)));
        EXPECT_GE(r0, Integer(0));
        EXPECT_LT(r0, Integer(m));

        Integer rb = canonical_r(Integer(a), Integer(b), mod(m),
                                 remainder_convention::balanced);
        EXPECT_TRUE(is_r_congruent(Integer(a), Integer(b), rb, mod(m)));
        EXPECT_GT(rb * 2, Integer(-m));
        EXPECT_LE(rb * 2, Integer(m));
      }
    }
  }
}

// =============================================================================
// classify
// =============================================================================

TEST(Classify, Examples) {
  EXPECT_EQ(classify(Integer(6), mod(3)), triviality::trivial);
  EXPECT_EQ(classify(Integer(3), mod(5)), triviality::non_trivial);
  for (long long m = 1; m <= 9; ++m)
    EXPECT_EQ(classify(Integer(0), mod(m)), triviality::trivial);
}

// Trivial index <=> the relation coincides with the index-0 relation.
TEST(Classify, TrivialMatchesGaussianSweep) {
  for (long long m = 1; m <= 6; ++m)
    for (long long r = -8; r <= 8; ++r) {
      if (classify(Integer(r), mod(m)) != triviality::trivial) continue;
      for (long long a = -6; a <= 6; ++a)
        for (long long b = -6; b <= 6; ++b)
          EXPECT_EQ(
              is_r_congruent(Integer(a), Integer(b), Integer(r), mod(m)),
              is_r_congruent(Integer(a), Integer(b), Integer(0), mod(m)));
    }
}

// =============================================================================
// gcd_ext / lcm_many
// =============================================================================

TEST(GcdExt, Examples) {
  auto e1 = rcong::gcd_ext(Integer(2), Integer(4));
  EXPECT_EQ(e1.g, Integer(2));
  EXPECT_EQ(Integer(2) * e1.x + Integer(4) * e1.y, Integer(2));

  for (long long m = 1; m <= 9; ++m)
    EXPECT_EQ(rcong::gcd_ext(Integer(1), Integer(m)).g, Integer(1));

  EXPECT_EQ(rcong::gcd_ext(Integer(12), Integer(18)).g, Integer(6));
}

TEST(GcdExt, RejectsBothZero) {
  EXPECT_THROW(rcong::gcd_ext(Integer(0), Integer(0)), std::invalid_argument);
}

TEST(GcdExt, BezoutSweep) {
  for (long long a = -20; a <= 20; ++a) {
    for (long long b = -20; b <= 20; ++b) {
      if (a == 0 && b == 0) continue;
      auto e = rcong::gcd_ext(Integer(a), Integer(b));
      EXPECT_GE(e.g, Integer(1));
      EXPECT_TRUE(rcong::detail::int_divides(e.g, Integer(a)));
      EXPECT_TRUE(rcong::detail::int_divides(e.g, Integer(b)));
      EXPECT_EQ(Integer(a) * e.x + Integer(b) * e.y, e.g);
    }
  }
}

TEST(LcmMany, Examples) {
  using M = rcong::modulus<Integer>;
  EXPECT_EQ(rcong::lcm_many<Integer>({M(Integer(3)), M(Integer(4))}).value(),
            Integer(12));
  EXPECT_EQ(rcong::lcm_many<Integer>({M(Integer(7))}).value(), Integer(7));
  EXPECT_EQ(rcong::lcm_many<Integer>(
                {M(Integer(2)), M(Integer(4)), M(Integer(6))})
                .value(),
            Integer(12));
}

TEST(LcmMany, RejectsEmptyList) {
  std::vector<rcong::modulus<Integer>> empty;
  EXPECT_THROW(lcm_many(empty), std::invalid_argument);
}

// =============================================================================
// Generic instantiation
// =============================================================================

static_assert(rcong::integer_like<rcong::Integer>);
static_assert(rcong::integer_like<long long>);
static_assert(rcong::integer_like<int>);
static_assert(!rcong::integer_like<double>);  // no remainder operator

TEST(GenericInteger, WorksWithBuiltinType) {
  rcong::modulus<long long> m(5);
  EXPECT_TRUE(rcong::is_r_congruent(7LL, 8LL, 4LL, m));
  auto [q, r] = rcong::div_rem(13LL, m);
  EXPECT_EQ(q, 2);
  EXPECT_EQ(r, 3);
  EXPECT_EQ(rcong::canonical_r(10LL, 1LL, m), 4);
}

TEST(GenericInteger, AgreesWithBigIntOnSmallGrid) {
  for (long long m = 1; m <= 5; ++m)
    for (long long a = -5; a <= 5; ++a)
      for (long long b = -5; b <= 5; ++b)
        for (long long r = -5; r <= 5; ++r)
          EXPECT_EQ(rcong::is_r_congruent(a, b, r, rcong::modulus<long long>(m)),
                    is_r_congruent(Integer(a), Integer(b), Integer(r), mod(m)));
}

}  // namespace
