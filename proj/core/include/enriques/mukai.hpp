#ifndef ENRIQUES_MUKAI_HPP
#define ENRIQUES_MUKAI_HPP

// Mukai vectors v = (r, c1, s) with s = r/2 + ch2 in (1/2)Z.  The last
// component is stored doubled (s2 = 2s) so that everything stays integral;
// c1^2 is even, hence s2 = r + c1^2 - 2 c2 has the parity of r.

#include <compare>

#include "enriques/integer.hpp"
#include "enriques/lattice.hpp"

namespace enriques {

class MukaiVector {
 public:
  /// Throws PreconditionError unless s2 == r (mod 2).
  MukaiVector(Integer r, PicClass c1, Integer s2);

  const Integer& rank() const { return r_; }
  const PicClass& c1() const { return c1_; }
  const Integer& s2() const { return s2_; }
  /// ch2 = (s2 - r) / 2.
  Integer ch2() const;
  bool is_zero() const;

  friend bool operator==(const MukaiVector& a, const MukaiVector& b) = default;
  friend MukaiVector operator*(const Integer& k, const MukaiVector& v);

 private:
  Integer r_;
  PicClass c1_;
  Integer s2_;
};

/// (v, w) = c1.c1' - r s' - r' s.  Torsion is ignored.
Integer mukai_pair(const MukaiVector& v, const MukaiVector& w);
Integer mukai_square(const MukaiVector& v);

struct ChernData {
  Integer r;
  PicClass c1;
  Integer c2;
  friend bool operator==(const ChernData&, const ChernData&) = default;
};

MukaiVector from_chern(const Integer& r, const PicClass& c1, const Integer& c2);
ChernData chern_from(const MukaiVector& v);

/// v(E(D)) = v(E) e^D.
MukaiVector twist(const MukaiVector& v, const PicClass& d);

struct PrimitiveDecomposition {
  Integer m;
  MukaiVector primitive;
};

/// v = m v0 with v0 primitive among Mukai vectors of sheaves, i.e. m is the
/// largest common divisor of r, the coordinates of c1 and ch2, restricted to
/// odd values when c1 carries the K_Y torsion bit.
PrimitiveDecomposition primitive_decompose(const MukaiVector& v);

/// Riemann-Roch: chi(E) = r + c1^2/2 - c2.
Integer euler_chi(const Integer& r, const PicClass& c1, const Integer& c2);

/// mu_H = H.c1 / r, or +infinity for r = 0.
struct Slope {
  bool infinite = false;
  Rational value;

  friend bool operator==(const Slope& a, const Slope& b);
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);
};

Slope slope(const MukaiVector& v, const NumClass& h);

/// P(m) = (r H^2 / 2) m^2 + (H.c1) m + s, i.e. the integral of
/// (1, mH, m^2 H^2 / 2) against v.  This is chi(E(mH)) - r/2; the shift is
/// the same multiple of the leading coefficient for every sheaf, so the
/// order of reduced polynomials is the usual Gieseker order.
struct HilbertPoly {
  Rational quadratic;
  Rational linear;
  Rational constant;

  Rational operator()(const Rational& m) const;
  friend bool operator==(const HilbertPoly&, const HilbertPoly&) = default;
};

HilbertPoly hilbert_poly(const MukaiVector& v, const NumClass& h);

/// P divided by its leading coefficient a_2 = r H^2 (P = a_2 m^2/2 + ...).
HilbertPoly reduced_hilbert_poly(const MukaiVector& v, const NumClass& h);

/// Compares reduced Hilbert polynomials coefficientwise from m^2 down.
/// Requires H ample and positive ranks.
std::strong_ordering gieseker_compare(const MukaiVector& v, const MukaiVector& w,
                                      const NumClass& h);

}  // namespace enriques

#endif  // ENRIQUES_MUKAI_HPP
