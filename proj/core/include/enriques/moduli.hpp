#ifndef ENRIQUES_MODULI_HPP
#define ENRIQUES_MODULI_HPP

// Numerical invariants of moduli of semistable sheaves with Mukai vector
// v = m v0 (v0 primitive) on an unnodal Enriques surface, for a generic
// polarization.  Genericity is assumed, not checked; see walls.hpp.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "enriques/integer.hpp"
#include "enriques/mukai.hpp"

namespace enriques {

enum class SemistableLocus {
  /// Strictly semistable sheaves form a proper closed subset of the given
  /// codimension.
  codimension,
  /// Every point is strictly semistable.
  all_semistable,
  /// There are no strictly semistable sheaves.
  all_stable,
};

struct ModuliProfile {
  MukaiVector v;
  Integer m;
  MukaiVector v0;
  bool nonempty = false;
  /// nullopt when the moduli space is empty.
  std::optional<Integer> dimension;
  bool stable_nonempty = false;
  SemistableLocus locus = SemistableLocus::all_stable;
  /// Meaningful only for SemistableLocus::codimension.
  Integer ss_codim;
  bool normal_k_trivial = false;
  /// 1 or 2 when known.
  std::optional<int> components;
  friend bool operator==(const ModuliProfile&, const ModuliProfile&) = default;
};

/// Throws PreconditionError for rank <= 0.
ModuliProfile moduli_profile(const MukaiVector& v);

struct HodgeDescriptor {
  /// "hilbert-scheme" or "rank-2-or-4 reduction".
  std::string strategy;
  /// Number of points, for the Hilbert scheme strategy.
  std::optional<Integer> points;
  std::optional<int> components;
  /// Ranks the even-rank reduction may land on.
  std::vector<int> target_ranks;
  std::optional<bool> irreducible;
  /// True when the component with determinant L + K_Y is known to be empty.
  bool twisted_component_empty = false;
  friend bool operator==(const HodgeDescriptor&, const HodgeDescriptor&) = default;
};

/// Requires v primitive of positive rank; for odd rank also v^2 >= -1.
HodgeDescriptor hodge_dispatch(const MukaiVector& v);

/// Polynomial in x, y keyed by the exponent pair (p, q).  Zero coefficients
/// are omitted.
using HodgePolynomial = std::map<std::pair<int, int>, Integer>;

/// The coefficient polynomials of z^0 .. z^n in the generating series of
/// virtual Hodge polynomials of the Hilbert schemes of points of Y.
std::vector<HodgePolynomial> hilbert_scheme_hodge_series(int n);

/// e(Y^[n])(x, y).  Throws PreconditionError for n < 0.
HodgePolynomial hilbert_scheme_hodge(int n);

/// Value at x = y = 1.
Integer euler_number(const HodgePolynomial& p);

}  // namespace enriques

#endif  // ENRIQUES_MODULI_HPP
