#ifndef ENRIQUES_LATTICE_HPP
#define ENRIQUES_LATTICE_HPP

// Numerical lattice Num(Y) = U + E8(-1) of an Enriques surface and the
// torsion-aware Picard group Pic(Y) = Num(Y) + <K_Y>.
//
// Coordinates are (u1, u2, a1, ..., a8).  u1, u2 span the hyperbolic plane U
// with Gram [[0,1],[1,0]].  a1..a8 span E8(-1): the Gram block is the
// negative of the E8 Cartan matrix, nodes a1-a2-a3-a4-a5-a6-a7 form a chain
// and a8 is attached to a5.  So a_i.a_i = -2 and adjacent nodes pair to +1.
//
// The E8 summand is taken negative definite so that the whole lattice has
// signature (1,9), as the Hodge index theorem requires of Num(Y).  Any even
// unimodular lattice of that signature is isometric to this one; the basis
// above is the interchange convention for every serialized class.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "enriques/integer.hpp"

namespace enriques {

inline constexpr std::size_t kLatticeRank = 10;
inline constexpr std::size_t kE8Offset = 2;

/// A numerical divisor class: ten integer coordinates in the fixed basis.
class NumClass {
 public:
  using Coords = std::array<Integer, kLatticeRank>;

  NumClass();
  explicit NumClass(Coords coords);
  /// Convenience constructor from machine integers (u1, u2, a1..a8).
  static NumClass from(std::array<long, kLatticeRank> coords);

  static NumClass zero() { return NumClass(); }
  static NumClass u1();
  static NumClass u2();
  /// Simple root a_i of E8(-1), i in 1..8.
  static NumClass root(int i);

  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const Coords& coords() const { return coords_; }

  bool is_zero() const;

  NumClass& operator+=(const NumClass& other);
  NumClass& operator-=(const NumClass& other);
  NumClass& operator*=(const Integer& k);

  friend NumClass operator+(NumClass a, const NumClass& b) { return a += b; }
  friend NumClass operator-(NumClass a, const NumClass& b) { return a -= b; }
  friend NumClass operator*(const Integer& k, NumClass a) { return a *= k; }
  friend NumClass operator-(NumClass a) { return a *= Integer(-1); }

  friend bool operator==(const NumClass& a, const NumClass& b);
  /// Lexicographic order on the coordinate tuple.
  friend std::strong_ordering operator<=>(const NumClass& a, const NumClass& b);

 private:
  Coords coords_;
};

std::string to_string(const NumClass& x);

/// A Picard class: numerical part plus the K_Y torsion bit.
struct PicClass {
  NumClass num;
  int torsion = 0;

  PicClass() = default;
  PicClass(NumClass n, int t = 0);

  static PicClass canonical() { return PicClass(NumClass::zero(), 1); }

  PicClass& operator+=(const PicClass& other);
  PicClass& operator-=(const PicClass& other);
  PicClass& operator*=(const Integer& k);
  friend PicClass operator+(PicClass a, const PicClass& b) { return a += b; }
  friend PicClass operator-(PicClass a, const PicClass& b) { return a -= b; }
  friend PicClass operator*(const Integer& k, PicClass a) { return a *= k; }
  friend PicClass operator-(PicClass a) { return a *= Integer(-1); }
  friend bool operator==(const PicClass& a, const PicClass& b) = default;
};

using GramMatrix = std::array<std::array<int, kLatticeRank>, kLatticeRank>;

/// The fixed Gram matrix.  The first call verifies that it is even,
/// unimodular and of signature (1,9) and aborts the process otherwise.
const GramMatrix& gram();

struct LatticeInvariants {
  Integer determinant;
  int positive = 0;
  int negative = 0;
  bool even = false;
};

/// Recomputes determinant, inertia and evenness of the Gram matrix.
LatticeInvariants lattice_invariants();

Integer pair(const NumClass& x, const NumClass& y);
Integer square(const NumClass& x);
Integer pair(const PicClass& x, const PicClass& y);
Integer square(const PicClass& x);

/// The vector G x, i.e. the linear form y -> pair(x, y) in coordinates.
NumClass dual(const NumClass& x);

/// Reference class u1 + u2 fixing the component of the positive cone that
/// contains the ample cone.
const NumClass& reference_ample();

/// gcd of the coordinates (0 for the zero class).
Integer content(const NumClass& x);
bool is_primitive(const NumClass& x);
/// x / content(x); the zero class maps to itself.
NumClass primitive_part(const NumClass& x);
/// x or -x, whichever has its first nonzero coordinate positive.
NumClass canonical_sign(const NumClass& x);

// Positivity on an unnodal surface.  There are no (-2)-curves, so the
// effective cone of classes with non-negative square is the closure of the
// positive cone component containing reference_ample().
bool is_effective(const PicClass& d);
bool is_ample(const NumClass& d);
/// D^2 > 0 and D.A > 0.
bool in_positive_cone(const NumClass& d);

/// A y with pair(x, y) == target, or nullopt when content(x) does not divide
/// target.  Deterministic: built from an extended gcd over dual(x).
std::optional<NumClass> solve_pairing(const NumClass& x, const Integer& target);

/// Splitting of the lattice along a nonzero class x.
struct OrthogonalSplit {
  /// Basis of the orthogonal complement x^perp (rank 9).
  std::vector<NumClass> complement;
  /// A class with pair(x, unit) == divisor.
  NumClass unit;
  /// content(x) up to sign; every pairing with x is a multiple of it.
  Integer divisor;
};

OrthogonalSplit orthogonal_split(const NumClass& x);

}  // namespace enriques

#endif  // ENRIQUES_LATTICE_HPP
