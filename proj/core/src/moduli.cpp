#include "enriques/moduli.hpp"

#include <array>

#include "enriques/errors.hpp"

namespace enriques {

ModuliProfile moduli_profile(const MukaiVector& v) {
  if (v.rank() <= 0) {
    throw PreconditionError("moduli_profile: rank must be positive");
  }
  const PrimitiveDecomposition dec = primitive_decompose(v);
  const Integer& m = dec.m;
  const Integer v02 = mukai_square(dec.primitive);

  ModuliProfile p{v, m, dec.primitive, false, std::nullopt, false,
                  SemistableLocus::all_stable, Integer(0), false, std::nullopt};
  p.nonempty = v02 >= -1;
  if (p.nonempty) {
    if (m > 1 && v02 == -1) {
      p.dimension = Integer(0);
    } else if (m > 1 && v02 == 0) {
      p.dimension = m;
    } else {
      p.dimension = mukai_square(v) + 1;
    }
  }
  p.stable_nonempty = (m == 1 && p.nonempty) || v02 > 0;

  if (m >= 2 && v02 >= 1) {
    // The smallest stratum splits v as v0 + (m-1) v0.
    p.locus = SemistableLocus::codimension;
    p.ss_codim = 2 * (m - 1) * v02 - 1;
  } else if (m >= 2 && p.nonempty) {
    p.locus = SemistableLocus::all_semistable;
  } else {
    p.locus = SemistableLocus::all_stable;
  }
  p.normal_k_trivial = p.locus == SemistableLocus::codimension && p.ss_codim >= 2;

  if (m == 1 && mpz_odd_p(v.rank().get_mpz_t())) {
    p.components = 2;
  } else if (m == 1 && v02 == 0) {
    p.components = 1;
  }
  return p;
}

HodgeDescriptor hodge_dispatch(const MukaiVector& v) {
  if (v.rank() <= 0) {
    throw PreconditionError("hodge_dispatch: rank must be positive");
  }
  if (primitive_decompose(v).m != 1) {
    throw PreconditionError("hodge_dispatch: Mukai vector must be primitive");
  }
  const Integer v2 = mukai_square(v);
  HodgeDescriptor d;
  if (mpz_odd_p(v.rank().get_mpz_t())) {
    if (v2 < -1) {
      throw PreconditionError("hodge_dispatch: moduli space is empty (v^2 < -1)");
    }
    d.strategy = "hilbert-scheme";
    d.points = (v2 + 1) / 2;
    d.components = 2;
    return d;
  }
  d.strategy = "rank-2-or-4 reduction";
  d.target_ranks = {2, 4};
  if (v2 == 0) {
    d.irreducible = true;
    d.components = 1;
    d.twisted_component_empty = true;
  }
  return d;
}

namespace {

using Series = std::vector<HodgePolynomial>;

void add_term(HodgePolynomial& p, std::pair<int, int> key, const Integer& c) {
  if (c == 0) {
    return;
  }
  Integer& slot = p[key];
  slot += c;
  if (slot == 0) {
    p.erase(key);
  }
}

Series multiply(const Series& a, const Series& b, std::size_t n) {
  Series out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; i + j <= n; ++j) {
      for (const auto& [ka, ca] : a[i]) {
        for (const auto& [kb, cb] : b[j]) {
          add_term(out[i + j], {ka.first + kb.first, ka.second + kb.second}, ca * cb);
        }
      }
    }
  }
  return out;
}

Integer binomial(const Integer& top, unsigned long k) {
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), k);
  return out;
}

}  // namespace

std::vector<HodgePolynomial> hilbert_scheme_hodge_series(int n) {
  if (n < 0) {
    throw PreconditionError("hilbert_scheme_hodge: n must be non-negative");
  }
  const auto size = static_cast<std::size_t>(n);
  // Nonzero Hodge numbers of an Enriques surface.
  constexpr std::array<std::array<int, 3>, 3> kHodge = {{{0, 0, 1}, {1, 1, 10}, {2, 2, 1}}};

  Series series(size + 1);
  series[0][{0, 0}] = 1;
  for (int k = 1; k <= n; ++k) {
    for (const auto& [p, q, h] : kHodge) {
      // (1 - x^a y^b z^k)^(-h) = sum_j C(h + j - 1, j) x^(ja) y^(jb) z^(jk).
      const int a = p + k - 1;
      const int b = q + k - 1;
      Series factor(size + 1);
      for (int j = 0; j * k <= n; ++j) {
        factor[static_cast<std::size_t>(j * k)][{j * a, j * b}] =
            binomial(Integer(h + j - 1), static_cast<unsigned long>(j));
      }
      series = multiply(series, factor, size);
    }
  }
  return series;
}

HodgePolynomial hilbert_scheme_hodge(int n) { return hilbert_scheme_hodge_series(n).back(); }

Integer euler_number(const HodgePolynomial& p) {
  Integer total = 0;
  for (const auto& [key, c] : p) {
    total += c;
  }
  return total;
}

}  // namespace enriques
