#ifndef ENRIQUES_FEASIBILITY_HPP
#define ENRIQUES_FEASIBILITY_HPP

// Arithmetic behind the construction of rank 4 mu-stable bundles as
// extensions of three twisted ideal sheaves I_{Z_i}(H) by O(-2H).  For
// H^2 and k = c2 - c1^2/2 the lengths of Z_1, Z_2, Z_3 are chosen as equal
// as possible and then every inequality the Cayley-Bacharach argument needs
// is checked in exact arithmetic.

#include <array>
#include <vector>

#include "enriques/integer.hpp"

namespace enriques {

struct CbLengths {
  Integer t;
  Integer a;
  /// (t, t - 1, t - a); they sum to (7/2) H^2 + k.
  std::array<Integer, 3> lengths;
  friend bool operator==(const CbLengths&, const CbLengths&) = default;
};

/// Requires k in -5..1 and H2 even with H2 >= table_row(k).min_c1_squared.
CbLengths cb_lengths(const Integer& h2, int k);

struct DestabilizerBounds {
  /// Upper bound on D.H for a destabilizing D through s of the subschemes.
  Rational degree;
  /// Upper bound on D^2 from the Hodge index theorem.
  Rational square;
  friend bool operator==(const DestabilizerBounds&, const DestabilizerBounds&) = default;
};

/// ((3s/4) H2, (9 s^2/16) H2).  Requires s in 1..3 and H2 > 0.
DestabilizerBounds destabilizer_bounds(int s, const Integer& h2);

struct FeasibilityCertificate {
  Integer h2;
  int k = 0;
  Integer t;
  Integer a;
  std::array<Integer, 3> lengths;
  /// h^0(3H + K_Y) = (9/2) H^2 + 1.
  Integer h0_bound;
  bool lengths_bounded = false;
  /// margins[s-1] is the slack of the strict inequality for s subschemes,
  /// taken over the worst subset.
  std::array<Rational, 3> margins;
  /// Growth of each margin per unit of H^2; all positive.
  std::array<Rational, 3> slopes;
  std::array<DestabilizerBounds, 3> degree_bounds;
  /// All margins strictly positive.
  bool pass = false;
  friend bool operator==(const FeasibilityCertificate&, const FeasibilityCertificate&) = default;
};

FeasibilityCertificate cb_check(const Integer& h2, int k);

struct SweepRow {
  int k = 0;
  Integer min_h2;
  Integer max_h2;
  /// Number of even H^2 values checked; 0 when max_h2 < min_h2.
  Integer cases;
  bool all_pass = true;
  /// Smallest margin seen for each s.
  std::array<Rational, 3> min_margins;
};

/// One row per k = 1, 0, ..., -5 covering every even H^2 from the table
/// minimum up to max_h2.
std::vector<SweepRow> cb_sweep(const Integer& max_h2);

}  // namespace enriques

#endif  // ENRIQUES_FEASIBILITY_HPP
