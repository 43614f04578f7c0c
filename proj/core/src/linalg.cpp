#include "linalg.hpp"

#include <stdexcept>
#include <utility>

namespace enriques::detail {

Integer determinant(IntegerMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) {
    return 1;
  }
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) {
        ++p;
      }
      if (p == n) {
        return 0;
      }
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

namespace {

void swap_symmetric(RationalMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) {
    return;
  }
  std::swap(a[i], a[j]);
  for (auto& row : a) {
    std::swap(row[i], row[j]);
  }
}

// Replace basis vector i by e_i + e_j.
void add_symmetric(RationalMatrix& a, std::size_t i, std::size_t j) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    a[i][c] += a[j][c];
  }
  for (std::size_t r = 0; r < n; ++r) {
    a[r][i] += a[r][j];
  }
}

}  // namespace

Inertia inertia(RationalMatrix a) {
  const std::size_t n = a.size();
  Inertia result;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][p] == 0) {
      ++p;
    }
    if (p == n) {
      // All remaining diagonal entries vanish: look for an off-diagonal one.
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i) {
        for (std::size_t j = i + 1; j < n && !found; ++j) {
          if (a[i][j] != 0) {
            add_symmetric(a, i, j);
            p = i;
            found = true;
          }
        }
      }
      if (!found) {
        result.zero += static_cast<int>(n - k);
        return result;
      }
    }
    swap_symmetric(a, k, p);
    const Rational d = a[k][k];
    (d > 0 ? result.positive : result.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) {
        continue;
      }
      const Rational f = a[i][k] / d;
      for (std::size_t j = k; j < n; ++j) {
        a[i][j] -= f * a[k][j];
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      a[k][i] = 0;
    }
  }
  return result;
}

std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) {
    throw std::invalid_argument("solve: dimension mismatch");
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) {
      ++p;
    }
    if (p == n) {
      return std::nullopt;
    }
    std::swap(a[k], a[p]);
    std::swap(b[k], b[p]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) {
        continue;
      }
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) {
        a[i][j] -= f * a[k][j];
      }
      b[i] -= f * b[k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      s -= a[i][j] * x[j];
    }
    x[i] = s / a[i][i];
  }
  return x;
}

RationalMatrix to_rational(const IntegerMatrix& a) {
  RationalMatrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i].reserve(a[i].size());
    for (const auto& v : a[i]) {
      r[i].emplace_back(v);
    }
  }
  return r;
}

}  // namespace enriques::detail
