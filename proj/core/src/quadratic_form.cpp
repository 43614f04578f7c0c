#include "enriques/quadratic_form.hpp"

#include <utility>

#include "enriques/errors.hpp"

namespace enriques {

std::optional<PositiveForm> PositiveForm::decompose(const IntegerMatrix& gram) {
  const std::size_t n = gram.size();
  std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i].size() != n) {
      throw std::invalid_argument("Gram matrix must be square");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (gram[i][j] != gram[j][i]) {
        throw std::invalid_argument("Gram matrix must be symmetric");
      }
      q[i][j] = gram[i][j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (q[i][i] <= 0) {
      return std::nullopt;
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k) {
      for (std::size_t l = k; l < n; ++l) {
        q[k][l] -= q[k][i] * q[i][l];
      }
    }
  }
  PositiveForm form;
  form.diag_.resize(n);
  form.upper_.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    form.diag_[i] = q[i][i];
    for (std::size_t j = i + 1; j < n; ++j) {
      form.upper_[i][j] = q[i][j];
    }
  }
  return form;
}

Rational PositiveForm::evaluate(std::span<const Rational> y) const {
  Rational total = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    Rational t = y[i];
    for (std::size_t j = i + 1; j < dim(); ++j) {
      t += upper_[i][j] * y[j];
    }
    total += diag_[i] * t * t;
  }
  return total;
}

struct PositiveForm::Walk {
  std::vector<Rational> center;
  std::vector<Integer> z;
  Rational bound;
  const PointVisitor* visit = nullptr;
};

bool PositiveForm::descend(Walk& walk, std::size_t level, const Rational& budget,
                           bool leading_zero) const {
  if (level == 0) {
    if (leading_zero) {
      return true;
    }
    return (*walk.visit)(walk.z, walk.bound - budget);
  }
  const std::size_t i = level - 1;
  Rational shift = 0;
  for (std::size_t j = i + 1; j < dim(); ++j) {
    if (upper_[i][j] != 0) {
      shift += upper_[i][j] * (walk.z[j] - walk.center[j]);
    }
  }
  const Rational mid = walk.center[i] - shift;
  const Rational& d = diag_[i];

  auto try_value = [&](const Integer& value, bool still_zero, bool& inside) -> bool {
    const Rational diff = value - mid;
    const Rational cost = d * diff * diff;
    inside = cost <= budget;
    if (!inside) {
      return true;
    }
    walk.z[i] = value;
    return descend(walk, i, budget - cost, still_zero);
  };

  bool inside = false;
  if (leading_zero) {
    // Everything above is zero and the center is the origin, so mid == 0.
    if (!try_value(Integer(0), true, inside)) {
      return false;
    }
    for (Integer v = 1;; ++v) {
      if (!try_value(v, false, inside)) {
        return false;
      }
      if (!inside) {
        break;
      }
    }
    walk.z[i] = 0;
    return true;
  }

  const Integer start = floor(mid);
  for (Integer v = start;; --v) {
    if (!try_value(v, false, inside)) {
      return false;
    }
    if (!inside) {
      break;
    }
  }
  for (Integer v = start + 1;; ++v) {
    if (!try_value(v, false, inside)) {
      return false;
    }
    if (!inside) {
      break;
    }
  }
  walk.z[i] = 0;
  return true;
}

bool PositiveForm::enumerate(std::span<const Rational> center, const Rational& bound,
                             const PointVisitor& visit) const {
  if (center.size() != dim()) {
    throw std::invalid_argument("enumerate: center has the wrong dimension");
  }
  if (bound < 0) {
    return true;
  }
  Walk walk;
  walk.center.assign(center.begin(), center.end());
  walk.z.assign(dim(), Integer(0));
  walk.bound = bound;
  walk.visit = &visit;
  return descend(walk, dim(), bound, false);
}

bool PositiveForm::enumerate_symmetric(const Rational& bound, const PointVisitor& visit) const {
  if (bound < 0) {
    return true;
  }
  Walk walk;
  walk.center.assign(dim(), Rational(0));
  walk.z.assign(dim(), Integer(0));
  walk.bound = bound;
  walk.visit = &visit;
  return descend(walk, dim(), bound, true);
}

IntegerMatrix negated_gram(std::span<const NumClass> basis) {
  const std::size_t n = basis.size();
  IntegerMatrix g(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      g[i][j] = -pair(basis[i], basis[j]);
      g[j][i] = g[i][j];
    }
  }
  return g;
}

namespace {

Integer round_nearest(const Rational& q) { return floor(q + Rational(1, 2)); }

}  // namespace

std::vector<NumClass> lll_reduce_negative(std::vector<NumClass> basis) {
  const std::size_t n = basis.size();
  if (n <= 1) {
    if (n == 1 && square(basis[0]) >= 0) {
      throw PreconditionError("sublattice is not negative definite");
    }
    return basis;
  }
  IntegerMatrix g = negated_gram(basis);
  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
  std::vector<Rational> b(n);
  const Rational delta(3, 4);

  auto gram_schmidt_row = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      Rational s = g[k][j];
      for (std::size_t i = 0; i < j; ++i) {
        s -= mu[j][i] * mu[k][i] * b[i];
      }
      mu[k][j] = s / b[j];
    }
    Rational s = g[k][k];
    for (std::size_t j = 0; j < k; ++j) {
      s -= mu[k][j] * mu[k][j] * b[j];
    }
    if (s <= 0) {
      throw PreconditionError("sublattice is not negative definite");
    }
    b[k] = s;
  };

  // b_k -= q b_l, keeping the Gram matrix and mu in step.
  auto reduce = [&](std::size_t k, std::size_t l) {
    if (abs(mu[k][l]) * 2 <= 1) {
      return;
    }
    const Integer q = round_nearest(mu[k][l]);
    basis[k] -= q * basis[l];
    const Integer gkl = g[k][l];
    const Integer gll = g[l][l];
    for (std::size_t j = 0; j < n; ++j) {
      if (j != k) {
        g[k][j] -= q * g[l][j];
        g[j][k] = g[k][j];
      }
    }
    g[k][k] += q * q * gll - 2 * q * gkl;
    mu[k][l] -= q;
    for (std::size_t i = 0; i < l; ++i) {
      mu[k][i] -= q * mu[l][i];
    }
  };

  auto swap_rows = [&](std::size_t k, std::size_t kmax) {
    std::swap(basis[k], basis[k - 1]);
    std::swap(g[k], g[k - 1]);
    for (auto& row : g) {
      std::swap(row[k], row[k - 1]);
    }
    for (std::size_t j = 0; j + 1 < k; ++j) {
      std::swap(mu[k][j], mu[k - 1][j]);
    }
    const Rational m = mu[k][k - 1];
    const Rational bb = b[k] + m * m * b[k - 1];
    mu[k][k - 1] = m * b[k - 1] / bb;
    b[k] = b[k - 1] * b[k] / bb;
    b[k - 1] = bb;
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const Rational t = mu[i][k];
      mu[i][k] = mu[i][k - 1] - m * t;
      mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
    }
  };

  gram_schmidt_row(0);
  std::size_t k = 1;
  std::size_t kmax = 0;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      gram_schmidt_row(k);
    }
    reduce(k, k - 1);
    if (b[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * b[k - 1]) {
      swap_rows(k, kmax);
      if (k > 1) {
        --k;
      }
      continue;
    }
    for (std::size_t l = k - 1; l-- > 0;) {
      reduce(k, l);
    }
    ++k;
  }
  return basis;
}

}  // namespace enriques
