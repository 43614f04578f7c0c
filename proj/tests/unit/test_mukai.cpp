#include <gtest/gtest.h>

#include "enriques/errors.hpp"
#include "enriques/mukai.hpp"
#include "oracles.hpp"

namespace enriques {
namespace {

const NumClass u1 = NumClass::u1();
const NumClass u2 = NumClass::u2();
// A class of square 8, as in the first row of the rank 4 table.
const PicClass c8(Integer(4) * u1 + u2);

MukaiVector mv(long r, const PicClass& c1, long s2) { return MukaiVector(Integer(r), c1, Integer(s2)); }

MukaiVector random_mukai(oracle::ClassSampler& s, bool torsion = false) {
  const long r = s.integer(-6, 6);
  const PicClass c1(s.uniform(-6, 6), torsion ? 1 : static_cast<int>(s.integer(0, 1)));
  long s2 = s.integer(-30, 30);
  if ((s2 - r) % 2 != 0) {
    ++s2;
  }
  return mv(r, c1, s2);
}

TEST(Mukai, ParityIsEnforced) {
  EXPECT_THROW(mv(1, PicClass(), 0), PreconditionError);
  EXPECT_THROW(mv(2, PicClass(), 1), PreconditionError);
  EXPECT_NO_THROW(mv(2, PicClass(), 0));
  EXPECT_NO_THROW(mv(-3, PicClass(), 5));
}

TEST(Mukai, PairingExamples) {
  EXPECT_EQ(mukai_square(mv(1, PicClass(), 1)), -1);
  EXPECT_EQ(mukai_square(mv(2, PicClass(), 0)), 0);
  EXPECT_EQ(mukai_square(mv(4, c8, 2)), 0);
}

TEST(Mukai, FromChernExamplesAndInverse) {
  const MukaiVector a = from_chern(Integer(1), PicClass(), Integer(0));
  EXPECT_EQ(a, mv(1, PicClass(), 1));
  const MukaiVector b = from_chern(Integer(4), c8, Integer(5));
  EXPECT_EQ(b, mv(4, c8, 2));
  const MukaiVector c = from_chern(Integer(2), PicClass(), Integer(0));
  EXPECT_EQ(c, mv(2, PicClass(), 2));
  EXPECT_EQ(chern_from(a), (ChernData{Integer(1), PicClass(), Integer(0)}));
  EXPECT_EQ(chern_from(b), (ChernData{Integer(4), c8, Integer(5)}));
  EXPECT_EQ(chern_from(c), (ChernData{Integer(2), PicClass(), Integer(0)}));
}

TEST(Mukai, ChernRoundTrip) {
  oracle::ClassSampler s(31);
  for (int i = 0; i < 200; ++i) {
    const Integer r = s.integer(0, 6);
    const PicClass c1(s.uniform(-5, 5), static_cast<int>(s.integer(0, 1)));
    const Integer c2 = s.integer(-50, 50);
    EXPECT_EQ(chern_from(from_chern(r, c1, c2)), (ChernData{r, c1, c2}));
  }
}

TEST(Mukai, TwistExamples) {
  const MukaiVector v = mv(4, c8, 2);
  EXPECT_EQ(twist(v, PicClass()), v);
  // Twisting rank 4 by an isotropic F adds 3 (c1.F) to c2.
  const PicClass f(u2);
  const Integer q = pair(c8, f);
  const ChernData before = chern_from(v);
  const ChernData after = chern_from(twist(v, f));
  EXPECT_EQ(after.c2, before.c2 + 3 * q);
}

TEST(Mukai, TwistIsAnIsometryAndPreservesMultiplicity) {
  oracle::ClassSampler s(32);
  for (int i = 0; i < 300; ++i) {
    const MukaiVector v = random_mukai(s);
    const MukaiVector w = random_mukai(s);
    const PicClass d(s.uniform(-5, 5), static_cast<int>(s.integer(0, 1)));
    EXPECT_EQ(mukai_pair(twist(v, d), twist(w, d)), mukai_pair(v, w));
    if (!v.is_zero()) {
      EXPECT_EQ(primitive_decompose(twist(v, d)).m, primitive_decompose(v).m);
    }
  }
}

TEST(Mukai, PrimitiveDecompositionExamples) {
  EXPECT_EQ(primitive_decompose(mv(1, PicClass(u1 + u2), 5)).m, 1);
  const PrimitiveDecomposition d = primitive_decompose(mv(2, PicClass(), 2));
  EXPECT_EQ(d.m, 2);
  EXPECT_EQ(d.primitive, mv(1, PicClass(), 1));
  EXPECT_EQ(primitive_decompose(mv(2, PicClass::canonical(), 2)).m, 1);
  EXPECT_EQ(primitive_decompose(mv(6, PicClass(Integer(3) * u1, 1), 6)).m, 3);
  EXPECT_THROW(primitive_decompose(mv(0, PicClass(), 0)), PreconditionError);
}

TEST(Mukai, PrimitiveDecompositionRecombines) {
  oracle::ClassSampler s(33);
  for (int i = 0; i < 300; ++i) {
    const MukaiVector v = random_mukai(s);
    if (v.is_zero()) {
      continue;
    }
    const PrimitiveDecomposition d = primitive_decompose(v);
    EXPECT_EQ(d.m * d.primitive, v);
    EXPECT_EQ(primitive_decompose(d.primitive).m, 1);
    if (v.c1().torsion == 1) {
      EXPECT_TRUE(mpz_odd_p(d.m.get_mpz_t()));
    }
  }
}

TEST(Mukai, EulerCharacteristicExamples) {
  EXPECT_EQ(euler_chi(Integer(1), PicClass(), Integer(0)), 1);
  EXPECT_EQ(euler_chi(Integer(4), c8, Integer(5)), 3);
  EXPECT_EQ(euler_chi(Integer(1), PicClass(u1 + u2), Integer(0)), 2);
}

TEST(Mukai, PairingWithTrivialSheafIsRiemannRoch) {
  oracle::ClassSampler s(34);
  const MukaiVector o = mv(1, PicClass(), 1);
  for (int i = 0; i < 200; ++i) {
    const MukaiVector v = random_mukai(s);
    const ChernData c = chern_from(v);
    EXPECT_EQ(mukai_pair(v, o), -euler_chi(c.r, c.c1, c.c2));
  }
}

TEST(Mukai, Slopes) {
  const NumClass h = u1 + u2;
  EXPECT_EQ(slope(mv(2, PicClass(u1 + u2), 0), h), (Slope{false, Rational(1)}));
  EXPECT_EQ(slope(mv(4, PicClass(), 0), h), (Slope{false, Rational(0)}));
  EXPECT_TRUE(slope(mv(0, PicClass(u1), 0), h).infinite);
  EXPECT_LT(slope(mv(4, PicClass(), 0), h), slope(mv(0, PicClass(u1), 0), h));
  EXPECT_THROW(slope(mv(1, PicClass(), 1), u1), PreconditionError);
}

TEST(Mukai, HilbertPolynomial) {
  const HilbertPoly p = hilbert_poly(mv(1, PicClass(), 1), u1 + u2);
  EXPECT_EQ(p.quadratic, 1);
  EXPECT_EQ(p.linear, 0);
  EXPECT_EQ(p.constant, Rational(1, 2));
  EXPECT_EQ(p(Rational(3)), Rational(19, 2));
}

TEST(Mukai, GiesekerOrder) {
  const NumClass h = u1 + u2;
  const MukaiVector v = mv(1, PicClass(), 1);
  EXPECT_EQ(gieseker_compare(v, v, h), std::strong_ordering::equal);
  EXPECT_EQ(gieseker_compare(v, mv(2, PicClass(), 2), h), std::strong_ordering::equal);
  EXPECT_EQ(gieseker_compare(v, mv(1, PicClass(u1), 1), h), std::strong_ordering::less);
  EXPECT_THROW(gieseker_compare(v, mv(0, PicClass(u1), 0), h), PreconditionError);
}

TEST(Mukai, GiesekerOrderIsScaleInvariant) {
  oracle::ClassSampler s(35);
  const NumClass h = u1 + Integer(2) * u2;
  for (int i = 0; i < 100; ++i) {
    MukaiVector v = random_mukai(s);
    MukaiVector w = random_mukai(s);
    if (v.rank() <= 0 || w.rank() <= 0) {
      continue;
    }
    const Integer k = s.integer(1, 5);
    const Integer l = s.integer(1, 5);
    EXPECT_EQ(gieseker_compare(k * v, l * w, h), gieseker_compare(v, w, h));
  }
}

}  // namespace
}  // namespace enriques
