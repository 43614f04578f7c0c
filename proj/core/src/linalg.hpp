#ifndef ENRIQUES_SRC_LINALG_HPP
#define ENRIQUES_SRC_LINALG_HPP

// Small dense exact linear algebra shared by the core translation units.

#include <optional>
#include <vector>

#include "enriques/integer.hpp"

namespace enriques::detail {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Fraction-free (Bareiss) determinant.
Integer determinant(IntegerMatrix a);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Sylvester inertia of a symmetric matrix by congruence elimination.
Inertia inertia(RationalMatrix a);

/// Solves a x = b for square nonsingular a; nullopt if singular.
std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b);

RationalMatrix to_rational(const IntegerMatrix& a);

}  // namespace enriques::detail

#endif  // ENRIQUES_SRC_LINALG_HPP
