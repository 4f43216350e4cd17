#include <gtest/gtest.h>

#include <rcong/rcong.hpp>

using rcong::Integer;

namespace {

rcong::modulus<Integer> mod(long long m) {
  return rcong::modulus<Integer>(Integer(m));
}

rcong::residue_class<Integer> cls(long long a, long long m, long long r) {
  return make_class(Integer(a), mod(m), Integer(r));
}

std::vector<Integer> ints(std::initializer_list<long long> vs) {
  std::vector<Integer> out;
  for (long long v : vs) out.emplace_back(v);
  return out;
}

// =============================================================================
// make_class / class_eq
// =============================================================================

TEST(MakeClass, Examples) {
  EXPECT_EQ(cls(0, 5, 3).rho(), Integer(3));
  EXPECT_EQ(cls(2, 5, 3).rho(), Integer(0));
  for (long long a = -9; a <= 9; ++a)
    EXPECT_EQ(cls(a, 4, 0).rho(),
              rcong::detail::mod_floor(Integer(a), Integer(4)));
}

TEST(ClassEq, Examples) {
  EXPECT_TRUE(class_eq(cls(0, 5, 3), cls(3, 5, 0)));
  // equal sets from indices congruent mod m, though neither divides the other
  EXPECT_TRUE(class_eq(cls(0, 5, 2), cls(0, 5, 7)));
  EXPECT_FALSE(class_eq(cls(0, 5, 1), cls(0, 5, 2)));
}

TEST(ClassEq, DifferentModuliCompareUnequal) {
  EXPECT_FALSE(class_eq(cls(0, 5, 3), cls(0, 3, 0)));
  EXPECT_FALSE(cls(1, 4, 0) == cls(1, 8, 0));
}

// class equality iff the shift indices are congruent mod m
TEST(ClassEq, IndexCongruenceLawSweep) {
  for (long long m = 1; m <= 8; ++m)
    for (long long a = -4; a <= 4; ++a)
      for (long long r1 = -16; r1 <= 16; ++r1)
        for (long long r2 = -16; r2 <= 16; ++r2)
          EXPECT_EQ(class_eq(cls(a, m, r1), cls(a, m, r2)),
                    (r1 - r2) % m == 0)
              << m << " " << a << " " << r1 << " " << r2;
}

// =============================================================================
// contains / members_in_range
// =============================================================================

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(cls(0, 5, 3), Integer(13)));
  EXPECT_TRUE(contains(cls(0, 5, 3), Integer(-2)));
  EXPECT_FALSE(contains(cls(0, 5, 3), Integer(5)));
}

TEST(MembersInRange, Examples) {
  EXPECT_EQ(members_in_range(cls(0, 5, 3), Integer(-2), Integer(13)),
            ints({-2, 3, 8, 13}));
  EXPECT_EQ(members_in_range(cls(4, 5, 3), Integer(-3), Integer(12)),
            ints({-3, 2, 7, 12}));
}

TEST(MembersInRange, RejectsInvertedRange) {
  EXPECT_THROW(members_in_range(cls(0, 5, 3), Integer(0), Integer(-1)),
               std::invalid_argument);
}

TEST(MembersInRange, CoherentWithContains) {
  for (long long m = 1; m <= 6; ++m)
    for (long long r = -6; r <= 6; ++r)
      for (long long x = -12; x <= 12; ++x) {
        auto c = cls(0, m, r);
        bool in = contains(c, Integer(x));
        auto window = members_in_range(c, Integer(x), Integer(x));
        EXPECT_EQ(in, !window.empty());
        if (in) EXPECT_EQ(window, ints({x}));
      }
}

// =============================================================================
// class_table
// =============================================================================

std::vector<Integer> rho_sequence(const rcong::class_table<Integer>& t) {
  std::vector<Integer> out;
  for (const auto& row : t.rows) out.push_back(row.cls.rho());
  return out;
}

TEST(ClassTable, ShiftByThreeModFive) {
  auto t = make_class_table(mod(5), Integer(3));
  EXPECT_EQ(rho_sequence(t), ints({3, 4, 0, 1, 2}));
}

TEST(ClassTable, ZeroShiftIsIdentity) {
  auto t = make_class_table(mod(4), Integer(0));
  EXPECT_EQ(rho_sequence(t), ints({0, 1, 2, 3}));
}

TEST(ClassTable, ShiftWrapsModM) {
  auto t = make_class_table(mod(4), Integer(6));
  EXPECT_EQ(rho_sequence(t), ints({2, 3, 0, 1}));
}

TEST(ClassTable, ExactlyMDistinctClassesSweep) {
  for (long long m = 1; m <= 12; ++m) {
    for (long long r = -12; r <= 12; ++r) {
      auto t = make_class_table(mod(m), Integer(r));
      ASSERT_EQ(t.rows.size(), static_cast<std::size_t>(m));
      for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = i + 1; j < t.rows.size(); ++j)
          EXPECT_FALSE(class_eq(t.rows[i].cls, t.rows[j].cls))
              << "m=" << m << " r=" << r;
    }
  }
}

TEST(ClassTable, ShiftFormulaSweep) {
  for (long long m = 1; m <= 12; ++m)
    for (long long r = -12; r <= 12; ++r)
      for (long long a = -12; a <= 12; ++a) {
        Integer plain = cls(a, m, 0).rho();
        EXPECT_EQ(cls(a, m, r).rho(),
                  rcong::detail::mod_floor(Integer(plain + r), Integer(m)));
      }
}

// The five displayed member windows for shift 3 mod 5.
TEST(ClassTable, ShiftByThreeModFiveMemberWindows) {
  auto t = make_class_table(mod(5), Integer(3));
  EXPECT_EQ(members_in_range(t.rows[0].cls, Integer(-2), Integer(13)),
            ints({-2, 3, 8, 13}));
  EXPECT_EQ(members_in_range(t.rows[1].cls, Integer(-1), Integer(14)),
            ints({-1, 4, 9, 14}));
  EXPECT_EQ(members_in_range(t.rows[2].cls, Integer(-5), Integer(10)),
            ints({-5, 0, 5, 10}));
  EXPECT_EQ(members_in_range(t.rows[3].cls, Integer(-4), Integer(11)),
            ints({-4, 1, 6, 11}));
  EXPECT_EQ(members_in_range(t.rows[4].cls, Integer(-3), Integer(12)),
            ints({-3, 2, 7, 12}));
}

}  // namespace
