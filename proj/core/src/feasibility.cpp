#include "enriques/feasibility.hpp"

#include <algorithm>
#include <stdexcept>

#include "enriques/errors.hpp"
#include "enriques/reduction.hpp"

namespace enriques {

CbLengths cb_lengths(const Integer& h2, int k) {
  const TableRow row = table_row(k);
  if (mpz_odd_p(h2.get_mpz_t())) {
    throw PreconditionError("cb_lengths: H^2 must be even");
  }
  if (h2 < row.min_c1_squared) {
    throw PreconditionError("cb_lengths: H^2 = " + h2.get_str() + " is below the minimum " +
                            row.min_c1_squared.get_str() + " for k = " + std::to_string(k));
  }
  CbLengths out;
  out.a = mod(2 + 2 * Integer(k) + h2, Integer(3));
  const Integer numerator = 7 * h2 + 2 * k + 2 * out.a + 2;
  if (!mpz_divisible_ui_p(numerator.get_mpz_t(), 6)) {
    throw std::logic_error("cb_lengths: t is not integral");
  }
  out.t = numerator / 6;
  out.lengths = {out.t, out.t - 1, out.t - out.a};
  return out;
}

DestabilizerBounds destabilizer_bounds(int s, const Integer& h2) {
  if (s < 1 || s > 3) {
    throw PreconditionError("destabilizer_bounds: s must be 1, 2 or 3");
  }
  if (h2 <= 0) {
    throw PreconditionError("destabilizer_bounds: H^2 must be positive");
  }
  return {make_rational(3 * s * h2, 4), make_rational(9 * s * s * h2, 16)};
}

FeasibilityCertificate cb_check(const Integer& h2, int k) {
  const CbLengths len = cb_lengths(h2, k);
  FeasibilityCertificate c;
  c.h2 = h2;
  c.k = k;
  c.t = len.t;
  c.a = len.a;
  c.lengths = len.lengths;
  c.h0_bound = 9 * h2 / 2 + 1;
  const auto [lmin, lmax] = std::minmax_element(c.lengths.begin(), c.lengths.end());
  c.lengths_bounded = *lmin >= 1 && *lmax <= c.h0_bound;

  const Rational h(h2);
  c.margins[0] = Rational(*lmin - 1) - Rational(9, 32) * h;
  c.margins[1] = Rational(19, 8) * h + Rational(k - 2) - Rational(*lmax);
  c.margins[2] = Rational(k - 3) + Rational(31, 32) * h;
  // The lengths grow like (7/6) H^2.
  c.slopes = {Rational(7, 6) - Rational(9, 32), Rational(19, 8) - Rational(7, 6),
              Rational(31, 32)};
  for (int s = 1; s <= 3; ++s) {
    c.degree_bounds[static_cast<std::size_t>(s - 1)] = destabilizer_bounds(s, h2);
  }
  c.pass = std::all_of(c.margins.begin(), c.margins.end(),
                       [](const Rational& m) { return m > 0; });
  return c;
}

std::vector<SweepRow> cb_sweep(const Integer& max_h2) {
  std::vector<SweepRow> rows;
  for (const TableRow& t : constraint_table()) {
    SweepRow row;
    row.k = t.k;
    row.min_h2 = t.min_c1_squared;
    row.max_h2 = max_h2;
    row.cases = 0;
    bool first = true;
    for (Integer h2 = t.min_c1_squared; h2 <= max_h2; h2 += 2) {
      const FeasibilityCertificate c = cb_check(h2, t.k);
      row.all_pass = row.all_pass && c.pass && c.lengths_bounded;
      for (std::size_t s = 0; s < 3; ++s) {
        if (first || c.margins[s] < row.min_margins[s]) {
          row.min_margins[s] = c.margins[s];
        }
      }
      first = false;
      ++row.cases;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace enriques
