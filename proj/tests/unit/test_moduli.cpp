#include <gtest/gtest.h>

#include "enriques/errors.hpp"
#include "enriques/moduli.hpp"
#include "oracles.hpp"

namespace enriques {
namespace {

const NumClass u1 = NumClass::u1();
const NumClass u2 = NumClass::u2();

// A primitive Mukai vector with the given square: rank 1 for odd squares,
// rank 2 for even ones.
MukaiVector primitive_with_square(long q) {
  if (q % 2 != 0) {
    return MukaiVector(Integer(1), PicClass(u1 + Integer((q + 1) / 2) * u2), Integer(1));
  }
  return MukaiVector(Integer(2), PicClass(u1 + Integer(q / 2) * u2), Integer(0));
}

TEST(Moduli, TrivialSheafVector) {
  const ModuliProfile p = moduli_profile(MukaiVector(Integer(1), PicClass(), Integer(1)));
  EXPECT_EQ(p.m, 1);
  EXPECT_TRUE(p.nonempty);
  EXPECT_EQ(p.dimension, Integer(0));
  EXPECT_TRUE(p.stable_nonempty);
  EXPECT_EQ(p.locus, SemistableLocus::all_stable);
  EXPECT_EQ(p.components, 2);
}

TEST(Moduli, TwiceTheTrivialSheafVector) {
  const ModuliProfile p = moduli_profile(MukaiVector(Integer(2), PicClass(), Integer(2)));
  EXPECT_EQ(p.m, 2);
  EXPECT_TRUE(p.nonempty);
  EXPECT_EQ(p.dimension, Integer(0));
  EXPECT_FALSE(p.stable_nonempty);
  EXPECT_EQ(p.locus, SemistableLocus::all_semistable);
  EXPECT_FALSE(p.normal_k_trivial);
}

// v = 2 v0 with v0^2 = 2: v^2 = 8, so the dimension is 9.
TEST(Moduli, TwiceAVectorOfSquareTwo) {
  const MukaiVector v0 = primitive_with_square(2);
  ASSERT_EQ(mukai_square(v0), 2);
  const ModuliProfile p = moduli_profile(Integer(2) * v0);
  EXPECT_EQ(p.m, 2);
  EXPECT_EQ(p.v0, v0);
  EXPECT_EQ(p.dimension, Integer(9));
  EXPECT_EQ(p.locus, SemistableLocus::codimension);
  EXPECT_EQ(p.ss_codim, 3);
  EXPECT_TRUE(p.normal_k_trivial);
  EXPECT_TRUE(p.stable_nonempty);
}

TEST(Moduli, EmptyWhenPrimitiveSquareBelowMinusOne) {
  const ModuliProfile p = moduli_profile(MukaiVector(Integer(1), PicClass(), Integer(3)));
  EXPECT_FALSE(p.nonempty);
  EXPECT_FALSE(p.dimension.has_value());
  EXPECT_FALSE(p.stable_nonempty);
}

TEST(Moduli, RejectsNonPositiveRank) {
  EXPECT_THROW(moduli_profile(MukaiVector(Integer(0), PicClass(u1), Integer(0))),
               PreconditionError);
  EXPECT_THROW(moduli_profile(MukaiVector(Integer(-1), PicClass(), Integer(1))),
               PreconditionError);
}

TEST(Moduli, SemistableCodimensionCriterionOnGrid) {
  for (long m = 2; m <= 6; ++m) {
    for (long q = -1; q <= 10; ++q) {
      const MukaiVector v0 = primitive_with_square(q);
      ASSERT_EQ(mukai_square(v0), q);
      const ModuliProfile p = moduli_profile(Integer(m) * v0);
      ASSERT_EQ(p.m, m);
      if (q >= 1) {
        ASSERT_EQ(p.locus, SemistableLocus::codimension);
        EXPECT_EQ(p.ss_codim >= 2, q > 1 || m > 2) << m << " " << q;
        EXPECT_EQ(p.normal_k_trivial, q > 1 || m > 2);
        EXPECT_EQ(p.dimension, Integer(m * m * q + 1));
      } else {
        EXPECT_EQ(p.locus, SemistableLocus::all_semistable);
        EXPECT_EQ(p.dimension, Integer(q == -1 ? 0 : m));
      }
    }
  }
}

TEST(Moduli, BranchTotalityAndRankOneDimension) {
  oracle::ClassSampler s(51);
  for (int i = 0; i < 400; ++i) {
    const long r = s.integer(1, 6);
    const PicClass c1(s.uniform(-4, 4), static_cast<int>(s.integer(0, 1)));
    long s2 = s.integer(-40, 40);
    if ((s2 - r) % 2 != 0) {
      ++s2;
    }
    const MukaiVector v(Integer(r), c1, Integer(s2));
    const ModuliProfile p = moduli_profile(v);
    EXPECT_EQ(p.m * p.v0, v);
    EXPECT_EQ(p.nonempty, mukai_square(p.v0) >= -1);
    EXPECT_EQ(p.dimension.has_value(), p.nonempty);
    if (p.m == 1 && p.nonempty) {
      EXPECT_EQ(*p.dimension, mukai_square(v) + 1);
    }
    if (p.stable_nonempty) {
      EXPECT_TRUE(p.nonempty);
    }
  }
}

TEST(Hodge, DispatchExamples) {
  const MukaiVector odd(Integer(3), PicClass(Integer(4) * u1 + u2), Integer(1));
  ASSERT_EQ(mukai_square(odd), 5);
  const HodgeDescriptor a = hodge_dispatch(odd);
  EXPECT_EQ(a.strategy, "hilbert-scheme");
  EXPECT_EQ(a.points, Integer(3));
  EXPECT_EQ(a.components, 2);

  const MukaiVector iso(Integer(2), PicClass(u1), Integer(0));
  ASSERT_EQ(mukai_square(iso), 0);
  const HodgeDescriptor b = hodge_dispatch(iso);
  EXPECT_EQ(b.strategy, "rank-2-or-4 reduction");
  EXPECT_EQ(b.irreducible, true);
  EXPECT_TRUE(b.twisted_component_empty);

  const MukaiVector four(Integer(4), PicClass(Integer(2) * u1 + u2), Integer(0));
  ASSERT_EQ(mukai_square(four), 4);
  const HodgeDescriptor c = hodge_dispatch(four);
  EXPECT_EQ(c.strategy, "rank-2-or-4 reduction");
  EXPECT_EQ(c.target_ranks, (std::vector<int>{2, 4}));
  EXPECT_FALSE(c.irreducible.has_value());

  EXPECT_THROW(hodge_dispatch(MukaiVector(Integer(2), PicClass(), Integer(2))),
               PreconditionError);
}

TEST(Hodge, SmallHilbertSchemes) {
  EXPECT_EQ(hilbert_scheme_hodge(0), (HodgePolynomial{{{0, 0}, Integer(1)}}));
  EXPECT_EQ(hilbert_scheme_hodge(1),
            (HodgePolynomial{{{0, 0}, Integer(1)}, {{1, 1}, Integer(10)}, {{2, 2}, Integer(1)}}));
  EXPECT_EQ(euler_number(hilbert_scheme_hodge(2)), 90);
  EXPECT_THROW(hilbert_scheme_hodge(-1), PreconditionError);
}

TEST(Hodge, EulerSpecialisationMatchesSeries) {
  const auto series = hilbert_scheme_hodge_series(10);
  const auto euler = oracle::euler_series(10);
  for (std::size_t n = 0; n <= 10; ++n) {
    EXPECT_EQ(euler_number(series[n]), euler[n]) << n;
  }
}

TEST(Hodge, PolynomialsAreSymmetric) {
  for (int n = 0; n <= 6; ++n) {
    const HodgePolynomial p = hilbert_scheme_hodge(n);
    for (const auto& [key, c] : p) {
      const auto mirror = p.find({key.second, key.first});
      ASSERT_NE(mirror, p.end());
      EXPECT_EQ(mirror->second, c);
      // Top degree of Y^[n] is 2n.
      EXPECT_LE(key.first, 2 * n);
      const auto serre = p.find({2 * n - key.first, 2 * n - key.second});
      ASSERT_NE(serre, p.end());
      EXPECT_EQ(serre->second, c);
    }
  }
}

}  // namespace
}  // namespace enriques
