#ifndef ENRIQUES_WALLS_HPP
#define ENRIQUES_WALLS_HPP

// Walls for a Mukai vector v of rank r >= 2 with v^2 > -r^2: hyperplanes
// xi^perp for classes xi with -(r^2/4)(v^2 + r^2) <= xi^2 < 0.  A polarization
// is generic for v when it is orthogonal to no such xi.

#include <vector>

#include "enriques/integer.hpp"
#include "enriques/lattice.hpp"
#include "enriques/mukai.hpp"

namespace enriques {

struct WallReport {
  MukaiVector v;
  NumClass h;
  /// Sign-canonical classes xi with xi.H = 0 and square_bound <= xi^2 < 0,
  /// sorted lexicographically.
  std::vector<NumClass> walls;
  bool generic = false;
  /// Least admissible xi^2, i.e. -floor((r^2/4)(v^2 + r^2)).  Since xi^2 is
  /// an integer this is equivalent to the real bound.
  Integer square_bound;
  friend bool operator==(const WallReport&, const WallReport&) = default;
};

/// floor((r^2/4)(v^2 + r^2)).  Throws PreconditionError unless r >= 2 and
/// v^2 > -r^2.
Integer wall_norm_bound(const MukaiVector& v);

/// Every wall through H.  Throws PreconditionError for non-ample H or v out
/// of range.
WallReport walls_through(const NumClass& h, const MukaiVector& v);

bool is_generic(const NumClass& h, const MukaiVector& v);

/// An ample generic H' = nH + delta with every |delta_i| <= radius.  H itself
/// is returned when it is already generic.  Throws SearchFailure when the
/// perturbation needed exceeds the radius.
NumClass find_generic_near(const NumClass& h, const MukaiVector& v, const Integer& radius);

}  // namespace enriques

#endif  // ENRIQUES_WALLS_HPP
