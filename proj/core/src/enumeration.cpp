#include "enriques/enumeration.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "enriques/errors.hpp"
#include "enriques/quadratic_form.hpp"
#include "linalg.hpp"

namespace enriques {

namespace {

NumClass combine(std::span<const NumClass> basis, std::span<const Integer> z) {
  NumClass x;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (z[i] != 0) {
      x += z[i] * basis[i];
    }
  }
  return x;
}

}  // namespace

std::vector<NumClass> short_vectors(const ShortVectorQuery& query) {
  if (query.basis.empty()) {
    return {};
  }
  if (query.basis.size() >= kLatticeRank) {
    throw PreconditionError("a negative definite sublattice has rank at most 9");
  }
  if (!PositiveForm::decompose(negated_gram(query.basis))) {
    throw PreconditionError("short_vectors: sublattice is not negative definite");
  }
  const std::vector<NumClass> reduced = lll_reduce_negative(query.basis);
  const auto form = PositiveForm::decompose(negated_gram(reduced));

  std::vector<NumClass> out;
  form->enumerate_symmetric(Rational(query.bound), [&](std::span<const Integer> z, const Rational&) {
    out.push_back(canonical_sign(combine(reduced, z)));
    return true;
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PhiResult phi(const NumClass& d) {
  if (!in_positive_cone(d)) {
    throw PreconditionError("phi: class must satisfy D^2 > 0 and D.A > 0");
  }
  const Integer d2 = square(d);
  const Integer cmax = isqrt(d2);

  const OrthogonalSplit split = orthogonal_split(d);
  const std::vector<NumClass> kernel = lll_reduce_negative(split.complement);
  const IntegerMatrix neg = negated_gram(kernel);
  const auto form = PositiveForm::decompose(neg);
  const std::size_t n = kernel.size();

  // Coordinates of the projection of `unit` onto D^perp in the kernel basis.
  detail::RationalMatrix pairing(n, std::vector<Rational>(n));
  std::vector<Rational> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      pairing[i][j] = -neg[i][j];
    }
    rhs[i] = pair(kernel[i], split.unit);
  }
  const auto unit_coords = detail::solve(pairing, rhs);
  if (!unit_coords) {
    throw std::logic_error("phi: singular orthogonal complement");
  }

  for (Integer c = split.divisor; c <= cmax; c += split.divisor) {
    const Integer scale = c / split.divisor;
    const NumClass base = scale * split.unit;
    std::vector<Rational> center(n);
    for (std::size_t i = 0; i < n; ++i) {
      center[i] = -(*unit_coords)[i] * scale;
    }
    const Rational target = make_rational(c * c, d2);

    std::optional<NumClass> best;
    form->enumerate(center, target, [&](std::span<const Integer> z, const Rational& value) {
      if (value != target) {
        return true;
      }
      NumClass f = base + combine(kernel, z);
      if (square(f) != 0 || pair(d, f) != c) {
        throw std::logic_error("phi: coset enumeration produced a non-isotropic class");
      }
      if (!best || f > *best) {
        best = std::move(f);
      }
      return true;
    });
    if (best) {
      if (!is_primitive(*best)) {
        throw std::logic_error("phi: minimal witness is not primitive");
      }
      return PhiResult{c, *best};
    }
  }
  throw std::logic_error("phi: no isotropic class with D.F <= sqrt(D^2)");
}

NumClass companion_pencil(const NumClass& e) {
  if (e.is_zero() || !is_primitive(e)) {
    throw PreconditionError("companion_pencil: class must be primitive");
  }
  if (square(e) != 0) {
    throw PreconditionError("companion_pencil: class must be isotropic");
  }
  if (!is_effective(PicClass(e))) {
    throw PreconditionError("companion_pencil: class must be effective");
  }
  const auto f_prime = solve_pairing(e, Integer(1));
  if (!f_prime) {
    throw std::logic_error("companion_pencil: unimodularity violated");
  }
  const Integer half = square(*f_prime) / 2;
  return *f_prime - half * e;
}

}  // namespace enriques
