#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "enriques/errors.hpp"
#include "enriques/walls.hpp"
#include "oracles.hpp"

namespace enriques {
namespace {

const NumClass u1 = NumClass::u1();
const NumClass u2 = NumClass::u2();
const NumClass h0 = u1 + u2;

MukaiVector example_v() { return MukaiVector(Integer(2), PicClass(u1 + u2), Integer(0)); }

TEST(Walls, ExampleThroughTheReferenceClass) {
  const WallReport r = walls_through(h0, example_v());
  EXPECT_EQ(r.square_bound, -6);
  EXPECT_FALSE(r.generic);
  EXPECT_TRUE(std::binary_search(r.walls.begin(), r.walls.end(), u1 - u2));
  EXPECT_FALSE(is_generic(h0, example_v()));
}

TEST(Walls, ReportedClassesSatisfyBothConditions) {
  const WallReport r = walls_through(h0, example_v());
  for (const NumClass& xi : r.walls) {
    EXPECT_EQ(pair(xi, h0), 0);
    EXPECT_LT(square(xi), 0);
    EXPECT_GE(square(xi), r.square_bound);
    EXPECT_EQ(canonical_sign(xi), xi);
  }
}

TEST(Walls, Preconditions) {
  EXPECT_THROW(walls_through(h0, MukaiVector(Integer(1), PicClass(), Integer(1))),
               PreconditionError);
  EXPECT_THROW(walls_through(u1, example_v()), PreconditionError);
  // v^2 = -4 = -r^2 is excluded.
  EXPECT_THROW(walls_through(h0, MukaiVector(Integer(2), PicClass(), Integer(2))),
               PreconditionError);
}

TEST(Walls, ScaleInvariance) {
  const NumClass h = Integer(2) * u1 + Integer(3) * u2 + NumClass::root(1);
  const MukaiVector v = example_v();
  EXPECT_EQ(walls_through(h, v).walls, walls_through(Integer(2) * h, v).walls);
}

// H = 2u1 + 3u2 pairs to 3 with u1 and 2 with u2, so a wall inside
// U + <a1> is xi = 2t u1 - 3t u2 + z a1 with xi^2 = -12t^2 - 2z^2.  For
// v = (2, u1 + u2, s2 = -20) the bound is 46, hence |t| <= 1 and |z| <= 4,
// and the box [-10, 10]^3 contains every solution.
TEST(Walls, CompleteOnRankThreeSublattice) {
  const NumClass h = Integer(2) * u1 + Integer(3) * u2;
  const MukaiVector v(Integer(2), PicClass(u1 + u2), Integer(-2));
  const WallReport r = walls_through(h, v);
  EXPECT_EQ(r.square_bound, -10);

  std::set<NumClass> box;
  for (long x = -10; x <= 10; ++x) {
    for (long y = -10; y <= 10; ++y) {
      for (long z = -10; z <= 10; ++z) {
        const NumClass xi = Integer(x) * u1 + Integer(y) * u2 + Integer(z) * NumClass::root(1);
        if (pair(xi, h) == 0 && square(xi) < 0 && square(xi) >= -10) {
          box.insert(canonical_sign(xi));
        }
      }
    }
  }
  std::set<NumClass> restricted;
  for (const NumClass& xi : r.walls) {
    bool inside = true;
    for (std::size_t i = kE8Offset + 1; i < kLatticeRank; ++i) {
      inside = inside && xi[i] == 0;
    }
    if (inside) {
      restricted.insert(xi);
    }
  }
  EXPECT_FALSE(box.empty());
  EXPECT_EQ(restricted, box);
}

TEST(GenericNear, AlreadyGenericIsReturnedUnchanged) {
  const MukaiVector v = example_v();
  const NumClass g = find_generic_near(h0, v, Integer(400));
  ASSERT_TRUE(is_generic(g, v));
  EXPECT_EQ(find_generic_near(g, v, Integer(0)), g);
}

TEST(GenericNear, RadiusZeroFails) {
  EXPECT_THROW(find_generic_near(h0, example_v(), Integer(0)), SearchFailure);
}

TEST(GenericNear, FindsAVerifiedGenericClass) {
  const MukaiVector v = example_v();
  const NumClass g = find_generic_near(h0, v, Integer(400));
  EXPECT_TRUE(is_ample(g));
  EXPECT_TRUE(is_generic(g, v));
  EXPECT_TRUE(walls_through(g, v).walls.empty());
  // g = n h0 + delta with |delta_i| <= 400.
  bool close = false;
  for (Integer scale = 1; scale <= abs(g[0]) + 400 && !close; ++scale) {
    const NumClass delta = g - scale * h0;
    close = std::all_of(delta.coords().begin(), delta.coords().end(),
                        [](const Integer& c) { return abs(c) <= 400; });
  }
  EXPECT_TRUE(close);
}

// Every E8 root is a wall through u1 + u2 for this v, so the E8 part of a
// perturbation must pair nonzero with all roots.  No vector in [-3, 3]^8
// (root coordinates) does, hence radius 3 cannot succeed.
TEST(GenericNear, RadiusThreeIsInfeasibleForTheExample) {
  std::vector<std::array<long, 8>> forms;
  for (const NumClass& xi : walls_through(h0, example_v()).walls) {
    if (xi[0] == 0 && xi[1] == 0 && square(xi) == -2) {
      const NumClass f = dual(xi);
      std::array<long, 8> row{};
      for (int i = 0; i < 8; ++i) {
        row[i] = f[kE8Offset + i].get_si();
      }
      forms.push_back(row);
    }
  }
  ASSERT_EQ(forms.size(), 120u);
  long regular = 0;
  std::array<long, 8> x{};
  for (long code = 0; code < 5764801; ++code) {
    long c = code;
    for (auto& xi : x) {
      xi = c % 7 - 3;
      c /= 7;
    }
    bool ok = true;
    for (const auto& f : forms) {
      long s = 0;
      for (int i = 0; i < 8; ++i) {
        s += f[i] * x[i];
      }
      if (s == 0) {
        ok = false;
        break;
      }
    }
    regular += ok ? 1 : 0;
  }
  EXPECT_EQ(regular, 0);
  EXPECT_THROW(find_generic_near(h0, example_v(), Integer(3)), SearchFailure);
}

}  // namespace
}  // namespace enriques
