#include "enriques/mukai.hpp"

#include <array>

#include "enriques/errors.hpp"

namespace enriques {

MukaiVector::MukaiVector(Integer r, PicClass c1, Integer s2)
    : r_(std::move(r)), c1_(std::move(c1)), s2_(std::move(s2)) {
  if (mpz_odd_p(Integer(s2_ - r_).get_mpz_t())) {
    throw PreconditionError("Mukai vector violates s2 == r (mod 2): r=" + r_.get_str() +
                            ", s2=" + s2_.get_str());
  }
}

Integer MukaiVector::ch2() const { return (s2_ - r_) / 2; }

bool MukaiVector::is_zero() const { return r_ == 0 && s2_ == 0 && c1_.num.is_zero() && c1_.torsion == 0; }

MukaiVector operator*(const Integer& k, const MukaiVector& v) {
  return MukaiVector(k * v.r_, k * v.c1_, k * v.s2_);
}

Integer mukai_pair(const MukaiVector& v, const MukaiVector& w) {
  // r s2' + r' s2 is even because both products have the parity of r r'.
  return pair(v.c1(), w.c1()) - (v.rank() * w.s2() + w.rank() * v.s2()) / 2;
}

Integer mukai_square(const MukaiVector& v) { return mukai_pair(v, v); }

MukaiVector from_chern(const Integer& r, const PicClass& c1, const Integer& c2) {
  return MukaiVector(r, c1, r + square(c1) - 2 * c2);
}

ChernData chern_from(const MukaiVector& v) {
  const Integer twice = v.rank() + square(v.c1()) - v.s2();
  if (mpz_odd_p(twice.get_mpz_t())) {
    throw PreconditionError("chern_from: c2 would not be integral");
  }
  return ChernData{v.rank(), v.c1(), twice / 2};
}

MukaiVector twist(const MukaiVector& v, const PicClass& d) {
  const Integer& r = v.rank();
  return MukaiVector(r, v.c1() + r * d, v.s2() + 2 * pair(v.c1(), d) + r * square(d));
}

PrimitiveDecomposition primitive_decompose(const MukaiVector& v) {
  if (v.is_zero()) {
    throw PreconditionError("primitive_decompose: zero vector");
  }
  Integer g = gcd(v.rank(), v.ch2());
  g = gcd(g, content(v.c1().num));
  if (g == 0) {
    // Only the torsion bit survives: (0, K_Y, 0) is primitive.
    return {Integer(1), v};
  }
  if (v.c1().torsion == 1) {
    while (mpz_even_p(g.get_mpz_t())) {
      g /= 2;
    }
  }
  NumClass c0 = v.c1().num;
  for (std::size_t i = 0; i < kLatticeRank; ++i) {
    mpz_divexact(c0[i].get_mpz_t(), c0[i].get_mpz_t(), g.get_mpz_t());
  }
  Integer r0 = v.rank() / g;
  Integer ch0 = v.ch2() / g;
  const int t0 = mpz_odd_p(g.get_mpz_t()) ? v.c1().torsion : 0;
  return {g, MukaiVector(r0, PicClass(std::move(c0), t0), r0 + 2 * ch0)};
}

Integer euler_chi(const Integer& r, const PicClass& c1, const Integer& c2) {
  return r + square(c1) / 2 - c2;
}

bool operator==(const Slope& a, const Slope& b) {
  if (a.infinite || b.infinite) {
    return a.infinite == b.infinite;
  }
  return a.value == b.value;
}

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
  if (a.infinite || b.infinite) {
    return a.infinite <=> b.infinite;
  }
  const int c = cmp(a.value, b.value);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

namespace {

void require_ample(const NumClass& h) {
  if (!is_ample(h)) {
    throw PreconditionError("polarization must be ample");
  }
}

}  // namespace

Slope slope(const MukaiVector& v, const NumClass& h) {
  require_ample(h);
  if (v.rank() == 0) {
    return Slope{true, Rational(0)};
  }
  return Slope{false, make_rational(pair(h, v.c1().num), v.rank())};
}

Rational HilbertPoly::operator()(const Rational& m) const {
  return quadratic * m * m + linear * m + constant;
}

HilbertPoly hilbert_poly(const MukaiVector& v, const NumClass& h) {
  require_ample(h);
  HilbertPoly p;
  p.quadratic = make_rational(v.rank() * square(h), 2);
  p.linear = Rational(pair(h, v.c1().num));
  p.constant = make_rational(v.s2(), 2);
  return p;
}

HilbertPoly reduced_hilbert_poly(const MukaiVector& v, const NumClass& h) {
  if (v.rank() <= 0) {
    throw PreconditionError("reduced Hilbert polynomial needs positive rank");
  }
  HilbertPoly p = hilbert_poly(v, h);
  const Rational lead(v.rank() * square(h));
  p.quadratic /= lead;
  p.linear /= lead;
  p.constant /= lead;
  return p;
}

std::strong_ordering gieseker_compare(const MukaiVector& v, const MukaiVector& w,
                                      const NumClass& h) {
  const HilbertPoly a = reduced_hilbert_poly(v, h);
  const HilbertPoly b = reduced_hilbert_poly(w, h);
  const std::array<int, 3> order = {cmp(a.quadratic, b.quadratic), cmp(a.linear, b.linear),
                                    cmp(a.constant, b.constant)};
  for (const int c : order) {
    if (c < 0) {
      return std::strong_ordering::less;
    }
    if (c > 0) {
      return std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace enriques
