#ifndef ENRIQUES_INTEGER_HPP
#define ENRIQUES_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>

namespace enriques {

/// Arbitrary precision integer used for every lattice coordinate and pairing.
using Integer = mpz_class;
/// Exact rational, always kept in canonical form.
using Rational = mpq_class;

Integer gcd(const Integer& a, const Integer& b);
Integer gcd(std::span<const Integer> values);

/// Floor and ceiling of a rational number.
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// floor(a / b) for b != 0.
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

/// Non-negative remainder of a modulo m > 0.
Integer mod(const Integer& a, const Integer& m);

/// Largest n with n*n <= a (a >= 0).
Integer isqrt(const Integer& a);

/// a / b as a canonical rational.
Rational make_rational(const Integer& a, const Integer& b = 1);

bool fits_int64(const Integer& a);
std::int64_t to_int64(const Integer& a);

/// "p" or "p/q".
std::string to_string(const Integer& a);
std::string to_string(const Rational& q);

}  // namespace enriques

#endif  // ENRIQUES_INTEGER_HPP
