#include <gtest/gtest.h>

#include "enriques/errors.hpp"
#include "enriques/feasibility.hpp"
#include "enriques/reduction.hpp"

namespace enriques {
namespace {

TEST(CbLengths, Examples) {
  const CbLengths a = cb_lengths(Integer(8), 1);
  EXPECT_EQ(a.t, 10);
  EXPECT_EQ(a.a, 0);
  EXPECT_EQ(a.lengths, (std::array<Integer, 3>{Integer(10), Integer(9), Integer(10)}));

  const CbLengths b = cb_lengths(Integer(16), 0);
  EXPECT_EQ(b.t, 19);
  EXPECT_EQ(b.lengths, (std::array<Integer, 3>{Integer(19), Integer(18), Integer(19)}));

  const CbLengths c = cb_lengths(Integer(56), -5);
  EXPECT_EQ(c.t, 64);
  EXPECT_EQ(c.a, 0);
  EXPECT_EQ(c.lengths, (std::array<Integer, 3>{Integer(64), Integer(63), Integer(64)}));
}

TEST(CbLengths, Preconditions) {
  EXPECT_THROW(cb_lengths(Integer(6), 1), PreconditionError);
  EXPECT_THROW(cb_lengths(Integer(9), 1), PreconditionError);
  EXPECT_THROW(cb_lengths(Integer(100), 2), PreconditionError);
  EXPECT_THROW(cb_lengths(Integer(54), -5), PreconditionError);
}

TEST(CbCheck, FirstRowExample) {
  const FeasibilityCertificate c = cb_check(Integer(8), 1);
  EXPECT_EQ(c.margins[2], Rational(23, 4));
  EXPECT_EQ(c.margins[0], Rational(23, 4));
  EXPECT_EQ(c.margins[1], Rational(8));
  EXPECT_EQ(c.h0_bound, 37);
  EXPECT_TRUE(c.lengths_bounded);
  EXPECT_TRUE(c.pass);
}

TEST(CbCheck, SecondRowExample) {
  const FeasibilityCertificate c = cb_check(Integer(16), 0);
  EXPECT_TRUE(c.pass);
  for (const Rational& m : c.margins) {
    EXPECT_GT(m, 0);
  }
}

TEST(DestabilizerBounds, Examples) {
  EXPECT_EQ(destabilizer_bounds(3, Integer(8)), (DestabilizerBounds{Rational(18), Rational(81, 2)}));
  EXPECT_EQ(destabilizer_bounds(1, Integer(32)), (DestabilizerBounds{Rational(24), Rational(18)}));
  EXPECT_EQ(destabilizer_bounds(2, Integer(8)), (DestabilizerBounds{Rational(12), Rational(18)}));
  EXPECT_THROW(destabilizer_bounds(4, Integer(8)), PreconditionError);
  EXPECT_THROW(destabilizer_bounds(1, Integer(0)), PreconditionError);
}

TEST(CbCheck, IdentitiesAndBoundsOverTheSweepRange) {
  for (const TableRow& row : constraint_table()) {
    for (Integer h2 = row.min_c1_squared; h2 <= 200; h2 += 2) {
      const FeasibilityCertificate c = cb_check(h2, row.k);
      const Integer sum = c.lengths[0] + c.lengths[1] + c.lengths[2];
      EXPECT_EQ(sum, 3 * c.t - 1 - c.a);
      EXPECT_EQ(2 * sum, 7 * h2 + 2 * row.k);
      EXPECT_GE(c.a, 0);
      EXPECT_LE(c.a, 2);
      EXPECT_EQ(mod(c.a - 2 - 2 * Integer(row.k) - h2, Integer(3)), 0);
      EXPECT_LE(c.t, c.h0_bound);
      EXPECT_TRUE(c.lengths_bounded);
      // Weaker bounds on a, one per residue class of k.
      const int k = row.k;
      if (k == 1 || k == -2 || k == -5) {
        EXPECT_LE(c.a + 1, 2 + h2);
      } else if (k == 0 || k == -3) {
        EXPECT_LE(c.a + 1, h2);
      } else {
        EXPECT_LE(c.a + 1, 1 + h2);
      }
      EXPECT_TRUE(c.pass) << h2 << " " << k;
      for (const Rational& s : c.slopes) {
        EXPECT_GT(s, 0);
      }
    }
  }
}

TEST(CbSweep, AllRowsPass) {
  const std::vector<SweepRow> rows = cb_sweep(Integer(200));
  ASSERT_EQ(rows.size(), 7u);
  for (const SweepRow& r : rows) {
    EXPECT_TRUE(r.all_pass) << r.k;
    EXPECT_GT(r.cases, 0);
    for (const Rational& m : r.min_margins) {
      EXPECT_GT(m, 0);
    }
  }
  EXPECT_EQ(rows.front().min_h2, 8);
  EXPECT_EQ(rows.front().cases, 97);
}

}  // namespace
}  // namespace enriques
