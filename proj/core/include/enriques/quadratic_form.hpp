#ifndef ENRIQUES_QUADRATIC_FORM_HPP
#define ENRIQUES_QUADRATIC_FORM_HPP

// Exact machinery for positive definite integral quadratic forms: the
// Fincke-Pohst square completion, lattice point enumeration inside an
// ellipsoid, and LLL reduction of sublattices of Num(Y) on which the
// intersection form is negative definite.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "enriques/integer.hpp"
#include "enriques/lattice.hpp"

namespace enriques {

using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Called with a lattice point z and the exact value Q(z - center).  Return
/// false to stop the enumeration.
using PointVisitor = std::function<bool(std::span<const Integer> z, const Rational& value)>;

/// Q(z) = sum_i d_i (z_i + sum_{j>i} m_ij z_j)^2 with every d_i > 0.
class PositiveForm {
 public:
  /// nullopt when the symmetric matrix is not positive definite.
  static std::optional<PositiveForm> decompose(const IntegerMatrix& gram);

  std::size_t dim() const { return diag_.size(); }
  Rational evaluate(std::span<const Rational> y) const;

  /// Visits every z with Q(z - center) <= bound.  Returns false iff the
  /// visitor stopped the walk.
  bool enumerate(std::span<const Rational> center, const Rational& bound,
                 const PointVisitor& visit) const;

  /// Visits every z != 0 with Q(z) <= bound once per pair {z, -z}: the
  /// representative whose last nonzero coordinate is positive.
  bool enumerate_symmetric(const Rational& bound, const PointVisitor& visit) const;

 private:
  struct Walk;
  bool descend(Walk& walk, std::size_t level, const Rational& budget, bool leading_zero) const;

  std::vector<Rational> diag_;
  std::vector<std::vector<Rational>> upper_;
};

/// Gram matrix of -pair on the given classes.
IntegerMatrix negated_gram(std::span<const NumClass> basis);

/// LLL-reduces (delta = 3/4) a basis of a sublattice on which pair is
/// negative definite, with respect to the positive form -pair.  Throws
/// PreconditionError if the form is not negative definite on the span.
std::vector<NumClass> lll_reduce_negative(std::vector<NumClass> basis);

}  // namespace enriques

#endif  // ENRIQUES_QUADRATIC_FORM_HPP
