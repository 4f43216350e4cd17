#include <gtest/gtest.h>

#include <rcong/rcong.hpp>

#include <random>

using rcong::Integer;
using ring_t = rcong::formal_ring<Integer>;

namespace {

ring_t make_ring(long long m, long long base = 0) {
  return ring_t(rcong::modulus<Integer>(Integer(m)), Integer(base));
}

TEST(FormalRing, AdditionExamples) {
  ring_t R = make_ring(5);
  EXPECT_EQ(psi(R.element(Integer(2)) + R.element(Integer(3))), Integer(5));
  EXPECT_EQ(R.element(Integer(7)) + R.zero(), R.element(Integer(7)));
  EXPECT_EQ(R.element(Integer(2)) + R.element(Integer(-2)), R.zero());
}

TEST(FormalRing, MultiplicationExamples) {
  ring_t R = make_ring(5);
  EXPECT_EQ(psi(R.element(Integer(2)) * R.element(Integer(3))), Integer(6));
  EXPECT_EQ(R.element(Integer(9)) * R.one(), R.element(Integer(9)));
  EXPECT_EQ(R.element(Integer(9)) * R.zero(), R.zero());
}

TEST(FormalRing, FormalEqualityIsIndexEquality) {
  ring_t R = make_ring(5);
  EXPECT_EQ(R.element(Integer(2)), R.element(Integer(2)));
  // indices 2 and 7 denote the same set but are formally distinct
  EXPECT_NE(R.element(Integer(2)), R.element(Integer(7)));
  EXPECT_EQ(to_class(R.element(Integer(2))), to_class(R.element(Integer(7))));
}

TEST(FormalRing, ToClassExamples) {
  ring_t R = make_ring(5);
  EXPECT_EQ(to_class(R.element(Integer(3))).rho(), Integer(3));
  for (long long a = -6; a <= 6; ++a) {
    ring_t S = make_ring(4, a);
    EXPECT_EQ(to_class(S.zero()),
              make_class(Integer(a), S.mod(), Integer(0)));
  }
}

TEST(FormalRing, PsiExamples) {
  ring_t R = make_ring(5);
  EXPECT_EQ(psi(R.element(Integer(3))), Integer(3));
  EXPECT_EQ(psi(R.zero()), Integer(0));
  EXPECT_EQ(psi(R.element(Integer(2)) + R.element(Integer(3))), Integer(5));
}

TEST(FormalRing, MixingInstancesThrows) {
  ring_t R = make_ring(5, 0);
  ring_t S = make_ring(5, 1);   // same modulus, different base point
  ring_t T = make_ring(7, 0);   // different modulus
  EXPECT_THROW(R.element(Integer(1)) + S.element(Integer(1)),
               std::invalid_argument);
  EXPECT_THROW(R.element(Integer(1)) * T.element(Integer(1)),
               std::invalid_argument);
  EXPECT_NE(R.element(Integer(1)), S.element(Integer(1)));
}

// Ring laws and the two homomorphism identities of psi over a randomized
// sample of index triples; deterministic seed.
TEST(FormalRing, LawsOnRandomizedTriples) {
  std::mt19937_64 rng(20240811u);
  std::uniform_int_distribution<long long> idx(-20, 20);
  std::uniform_int_distribution<long long> pick_m(1, 12);
  std::uniform_int_distribution<long long> pick_a(-10, 10);
  for (int trial = 0; trial < 1500; ++trial) {
    ring_t R = make_ring(pick_m(rng), pick_a(rng));
    auto x = R.element(Integer(idx(rng)));
    auto y = R.element(Integer(idx(rng)));
    auto z = R.element(Integer(idx(rng)));
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x + R.zero(), x);
    EXPECT_EQ(x * R.one(), x);
    EXPECT_EQ(x + (-x), R.zero());
    EXPECT_EQ(psi(x + y), psi(x) + psi(y));
    EXPECT_EQ(psi(x * y), psi(x) * psi(y));
  }
}

// For every modulus there are formally distinct elements r and r + m whose
// set-level views coincide, so the index map cannot be injective on sets.
TEST(FormalRing, CollisionWitnessForEveryModulus) {
  for (long long m = 1; m <= 12; ++m) {
    for (long long r = -6; r <= 6; ++r) {
      ring_t R = make_ring(m);
      auto x = R.element(Integer(r));
      auto y = R.element(Integer(r + m));
      EXPECT_NE(x, y);
      EXPECT_NE(psi(x), psi(y));
      EXPECT_EQ(to_class(x), to_class(y));
    }
  }
}

}  // namespace
