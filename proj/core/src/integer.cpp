#include "enriques/integer.hpp"

#include <stdexcept>

namespace enriques {

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer gcd(std::span<const Integer> values) {
  Integer g = 0;
  for (const auto& v : values) {
    g = gcd(g, v);
  }
  return g;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) {
    throw std::domain_error("floor_div: division by zero");
  }
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  if (b == 0) {
    throw std::domain_error("ceil_div: division by zero");
  }
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer isqrt(const Integer& a) {
  if (a < 0) {
    throw std::domain_error("isqrt of a negative integer");
  }
  Integer r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

Rational make_rational(const Integer& a, const Integer& b) {
  if (b == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  Rational q(a, b);
  q.canonicalize();
  return q;
}

bool fits_int64(const Integer& a) {
  static const Integer lo("-9223372036854775808");
  static const Integer hi("9223372036854775807");
  return a >= lo && a <= hi;
}

std::int64_t to_int64(const Integer& a) {
  if (!fits_int64(a)) {
    throw std::overflow_error("integer does not fit in 64 bits: " + a.get_str());
  }
  // mpz_get_si is long, which is 64-bit on the supported platforms.
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return static_cast<std::int64_t>(a.get_si());
}

std::string to_string(const Integer& a) { return a.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace enriques
