#include <gtest/gtest.h>

#include "enriques/errors.hpp"
#include "enriques/lattice.hpp"
#include "oracles.hpp"

namespace enriques {
namespace {

const NumClass u1 = NumClass::u1();
const NumClass u2 = NumClass::u2();

TEST(Lattice, GramMatchesIndependentConstruction) {
  for (std::size_t i = 0; i < kLatticeRank; ++i) {
    for (std::size_t j = 0; j < kLatticeRank; ++j) {
      EXPECT_EQ(gram()[i][j], oracle::gram64()[i][j]) << i << "," << j;
    }
  }
}

TEST(Lattice, InvariantsAreEvenUnimodularOfSignatureOneNine) {
  const LatticeInvariants inv = lattice_invariants();
  EXPECT_EQ(inv.determinant, -1);
  EXPECT_EQ(inv.positive, 1);
  EXPECT_EQ(inv.negative, 9);
  EXPECT_TRUE(inv.even);
}

TEST(Lattice, BasicPairings) {
  EXPECT_EQ(pair(u1, u2), 1);
  EXPECT_EQ(pair(NumClass::root(1), NumClass::root(1)), -2);
  EXPECT_EQ(pair(u1 + u2, u1 + u2), 2);
  EXPECT_EQ(pair(NumClass::root(5), NumClass::root(8)), 1);
  EXPECT_EQ(pair(NumClass::root(7), NumClass::root(8)), 0);
}

TEST(Lattice, PairingIsSymmetricAndEven) {
  oracle::ClassSampler s(11);
  for (int i = 0; i < 300; ++i) {
    const NumClass x = s.uniform(-30, 30);
    const NumClass y = s.uniform(-30, 30);
    EXPECT_EQ(pair(x, y), pair(y, x));
    EXPECT_EQ(pair(x, y), oracle::pair64(oracle::to_vec(x), oracle::to_vec(y)));
    EXPECT_TRUE(mpz_even_p(square(x).get_mpz_t()));
  }
}

TEST(Lattice, TorsionAddsModTwoAndIsIgnoredByPairing) {
  const PicClass k = PicClass::canonical();
  EXPECT_EQ((k + k).torsion, 0);
  EXPECT_EQ((k + PicClass(u1)).torsion, 1);
  EXPECT_EQ(square(k), 0);
  EXPECT_EQ(pair(PicClass(u1, 1), PicClass(u2, 1)), 1);
  EXPECT_EQ((Integer(2) * PicClass(u1, 1)).torsion, 0);
  EXPECT_EQ((Integer(3) * PicClass(u1, 1)).torsion, 1);
  EXPECT_EQ((-PicClass(u1, 1)).torsion, 1);
}

TEST(Lattice, Effectivity) {
  EXPECT_TRUE(is_effective(PicClass(u1 + u2)));
  EXPECT_FALSE(is_effective(PicClass(-(u1 + u2))));
  EXPECT_FALSE(is_effective(PicClass::canonical()));
  EXPECT_TRUE(is_effective(PicClass(NumClass::zero())));
  EXPECT_TRUE(is_effective(PicClass(u1, 1)));
  EXPECT_FALSE(is_effective(PicClass(u1 - u2)));
}

TEST(Lattice, Ampleness) {
  EXPECT_TRUE(is_ample(u1 + u2));
  EXPECT_FALSE(is_ample(u1));
  EXPECT_FALSE(is_ample(u1 - u2));
  EXPECT_FALSE(is_ample(-(u1 + u2)));
}

TEST(Lattice, EffectivityTrichotomyOnNonNegativeSquares) {
  oracle::ClassSampler s(12);
  int checked = 0;
  while (checked < 300) {
    const NumClass x = s.uniform(-8, 8);
    if (x.is_zero() || square(x) < 0) {
      continue;
    }
    ++checked;
    EXPECT_NE(is_effective(PicClass(x)), is_effective(PicClass(-x))) << to_string(x);
    if (is_ample(x)) {
      EXPECT_TRUE(is_effective(PicClass(x)));
    }
  }
}

TEST(Lattice, EveryPrimitiveClassHasADualPartner) {
  oracle::ClassSampler s(13);
  int checked = 0;
  while (checked < 100) {
    const NumClass x = s.uniform(-40, 40);
    if (!is_primitive(x)) {
      continue;
    }
    ++checked;
    const auto y = solve_pairing(x, Integer(1));
    ASSERT_TRUE(y.has_value());
    EXPECT_EQ(pair(x, *y), 1);
  }
}

TEST(Lattice, SolvePairingRespectsContent) {
  const NumClass x = Integer(6) * u1 + Integer(4) * NumClass::root(3);
  EXPECT_EQ(content(x), 2);
  EXPECT_FALSE(solve_pairing(x, Integer(1)).has_value());
  const auto y = solve_pairing(x, Integer(-10));
  ASSERT_TRUE(y.has_value());
  EXPECT_EQ(pair(x, *y), -10);
}

TEST(Lattice, OrthogonalSplitSpansTheComplement) {
  oracle::ClassSampler s(14);
  for (int i = 0; i < 50; ++i) {
    const NumClass x = s.uniform(-15, 15);
    if (x.is_zero()) {
      continue;
    }
    const OrthogonalSplit split = orthogonal_split(x);
    ASSERT_EQ(split.complement.size(), kLatticeRank - 1);
    EXPECT_EQ(split.divisor, content(x));
    EXPECT_EQ(pair(x, split.unit), split.divisor);
    for (const NumClass& k : split.complement) {
      EXPECT_EQ(pair(x, k), 0);
    }
  }
}

TEST(Lattice, ContentAndCanonicalSign) {
  EXPECT_EQ(content(NumClass::zero()), 0);
  EXPECT_EQ(primitive_part(Integer(3) * (u1 - u2)), u1 - u2);
  EXPECT_EQ(canonical_sign(u2 - u1), u1 - u2);
  EXPECT_TRUE(is_primitive(u1));
  EXPECT_FALSE(is_primitive(Integer(2) * u1));
}

}  // namespace
}  // namespace enriques
