#ifndef ENRIQUES_ENUMERATION_HPP
#define ENRIQUES_ENUMERATION_HPP

#include <vector>

#include "enriques/integer.hpp"
#include "enriques/lattice.hpp"

namespace enriques {

/// Short vectors of a negative definite sublattice spanned by `basis`.
struct ShortVectorQuery {
  std::vector<NumClass> basis;
  /// Largest |x^2| reported.
  Integer bound;
};

/// All x != 0 in the span with 0 < -x^2 <= bound, one per pair {x, -x}
/// (first nonzero coordinate positive), sorted lexicographically.
/// Throws PreconditionError unless the basis spans a negative definite
/// sublattice of full rank.
std::vector<NumClass> short_vectors(const ShortVectorQuery& query);

struct PhiResult {
  /// phi(D) = min |D.F| over isotropic F != 0.
  Integer value;
  /// Primitive isotropic F with D.F == value.
  NumClass witness;
  friend bool operator==(const PhiResult&, const PhiResult&) = default;
};

/// The phi invariant of a class D in the positive cone.  Candidate values
/// c = 1, 2, ... are tried in order; for each one the isotropic classes with
/// D.F = c form a bounded search in a coset of D^perp.  Among witnesses of
/// the minimal value the lexicographically largest is returned.
/// Throws PreconditionError if D is not in the positive cone.
PhiResult phi(const NumClass& d);

/// Given a primitive effective isotropic E, an isotropic F with E.F = 1,
/// obtained as F' - (F'^2/2) E from any F' with E.F' = 1.
NumClass companion_pencil(const NumClass& e);

}  // namespace enriques

#endif  // ENRIQUES_ENUMERATION_HPP
