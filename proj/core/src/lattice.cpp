#include "enriques/lattice.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "linalg.hpp"

namespace enriques {

NumClass::NumClass() {
  for (auto& c : coords_) {
    c = 0;
  }
}

NumClass::NumClass(Coords coords) : coords_(std::move(coords)) {}

NumClass NumClass::from(std::array<long, kLatticeRank> coords) {
  Coords c;
  for (std::size_t i = 0; i < kLatticeRank; ++i) {
    c[i] = coords[i];
  }
  return NumClass(std::move(c));
}

NumClass NumClass::u1() {
  NumClass x;
  x.coords_[0] = 1;
  return x;
}

NumClass NumClass::u2() {
  NumClass x;
  x.coords_[1] = 1;
  return x;
}

NumClass NumClass::root(int i) {
  if (i < 1 || i > 8) {
    throw std::out_of_range("E8 root index must be in 1..8");
  }
  NumClass x;
  x.coords_[kE8Offset + static_cast<std::size_t>(i - 1)] = 1;
  return x;
}

bool NumClass::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) {
      return false;
    }
  }
  return true;
}

NumClass& NumClass::operator+=(const NumClass& other) {
  for (std::size_t i = 0; i < kLatticeRank; ++i) {
    coords_[i] += other.coords_[i];
  }
  return *this;
}

NumClass& NumClass::operator-=(const NumClass& other) {
  for (std::size_t i = 0; i < kLatticeRank; ++i) {
    coords_[i] -= other.coords_[i];
  }
  return *this;
}

NumClass& NumClass::operator*=(const Integer& k) {
  for (auto& c : coords_) {
    c *= k;
  }
  return *this;
}

bool operator==(const NumClass& a, const NumClass& b) {
  for (std::size_t i = 0; i < kLatticeRank; ++i) {
    if (a.coords_[i] != b.coords_[i]) {
      return false;
    }
  }
  return true;
}

std::strong_ordering operator<=>(const NumClass& a, const NumClass& b) {
  for (std::size_t i = 0; i < kLatticeRank; ++i) {
    const int c = cmp(a.coords_[i], b.coords_[i]);
    if (c < 0) {
      return std::strong_ordering::less;
    }
    if (c > 0) {
      return std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

std::string to_string(const NumClass& x) {
  std::ostringstream out;
  out << "(" << x[0] << "," << x[1] << ";";
  for (std::size_t i = kE8Offset; i < kLatticeRank; ++i) {
    out << (i == kE8Offset ? "" : ",") << x[i];
  }
  out << ")";
  return out.str();
}

PicClass::PicClass(NumClass n, int t) : num(std::move(n)), torsion(t & 1) {}

PicClass& PicClass::operator+=(const PicClass& other) {
  num += other.num;
  torsion = (torsion + other.torsion) & 1;
  return *this;
}

PicClass& PicClass::operator-=(const PicClass& other) {
  num -= other.num;
  torsion = (torsion + other.torsion) & 1;
  return *this;
}

PicClass& PicClass::operator*=(const Integer& k) {
  num *= k;
  if (mpz_even_p(k.get_mpz_t())) {
    torsion = 0;
  }
  return *this;
}

namespace {

GramMatrix build_gram() {
  GramMatrix g{};
  g[0][1] = 1;
  g[1][0] = 1;
  for (std::size_t i = 0; i < 8; ++i) {
    g[kE8Offset + i][kE8Offset + i] = -2;
  }
  auto link = [&g](std::size_t a, std::size_t b) {
    g[kE8Offset + a - 1][kE8Offset + b - 1] = 1;
    g[kE8Offset + b - 1][kE8Offset + a - 1] = 1;
  };
  for (std::size_t i = 1; i < 7; ++i) {
    link(i, i + 1);
  }
  link(5, 8);
  return g;
}

LatticeInvariants compute_invariants(const GramMatrix& g) {
  detail::IntegerMatrix m(kLatticeRank, std::vector<Integer>(kLatticeRank));
  bool even = true;
  for (std::size_t i = 0; i < kLatticeRank; ++i) {
    for (std::size_t j = 0; j < kLatticeRank; ++j) {
      m[i][j] = g[i][j];
    }
    even = even && (g[i][i] % 2 == 0);
  }
  LatticeInvariants inv;
  inv.determinant = detail::determinant(m);
  const auto in = detail::inertia(detail::to_rational(m));
  inv.positive = in.positive;
  inv.negative = in.negative;
  inv.even = even;
  return inv;
}

const GramMatrix& checked_gram() {
  static const GramMatrix g = [] {
    GramMatrix built = build_gram();
    const auto inv = compute_invariants(built);
    const bool unimodular = inv.determinant == 1 || inv.determinant == -1;
    if (!unimodular || inv.positive != 1 || inv.negative != 9 || !inv.even) {
      std::fprintf(stderr, "enriques: Gram matrix failed its structural check\n");
      std::abort();
    }
    return built;
  }();
  return g;
}

}  // namespace

const GramMatrix& gram() { return checked_gram(); }

LatticeInvariants lattice_invariants() { return compute_invariants(gram()); }

NumClass dual(const NumClass& x) {
  const auto& g = gram();
  NumClass y;
  for (std::size_t i = 0; i < kLatticeRank; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < kLatticeRank; ++j) {
      if (g[i][j] != 0 && x[j] != 0) {
        s += g[i][j] * x[j];
      }
    }
    y[i] = s;
  }
  return y;
}

Integer pair(const NumClass& x, const NumClass& y) {
  const auto& g = gram();
  Integer s = 0;
  for (std::size_t i = 0; i < kLatticeRank; ++i) {
    if (x[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < kLatticeRank; ++j) {
      if (g[i][j] != 0 && y[j] != 0) {
        s += g[i][j] * x[i] * y[j];
      }
    }
  }
  return s;
}

Integer square(const NumClass& x) { return pair(x, x); }
Integer pair(const PicClass& x, const PicClass& y) { return pair(x.num, y.num); }
Integer square(const PicClass& x) { return square(x.num); }

const NumClass& reference_ample() {
  static const NumClass a = NumClass::u1() + NumClass::u2();
  return a;
}

Integer content(const NumClass& x) { return gcd(std::span<const Integer>(x.coords())); }

bool is_primitive(const NumClass& x) { return content(x) == 1; }

NumClass primitive_part(const NumClass& x) {
  const Integer c = content(x);
  if (c == 0 || c == 1) {
    return x;
  }
  NumClass y = x;
  for (std::size_t i = 0; i < kLatticeRank; ++i) {
    mpz_divexact(y[i].get_mpz_t(), y[i].get_mpz_t(), c.get_mpz_t());
  }
  return y;
}

NumClass canonical_sign(const NumClass& x) {
  for (std::size_t i = 0; i < kLatticeRank; ++i) {
    if (x[i] != 0) {
      return x[i] > 0 ? x : -x;
    }
  }
  return x;
}

bool is_effective(const PicClass& d) {
  if (d.num.is_zero()) {
    return d.torsion == 0;
  }
  return square(d.num) >= 0 && pair(d.num, reference_ample()) > 0;
}

bool is_ample(const NumClass& d) { return in_positive_cone(d); }

bool in_positive_cone(const NumClass& d) {
  return square(d) > 0 && pair(d, reference_ample()) > 0;
}

namespace {

// Extended gcd over the coordinates of w: returns (g, y) with w.y = g >= 0
// (plain dot product).  Once the running gcd reaches 1 later coordinates are
// left untouched.
std::pair<Integer, NumClass> bezout(const NumClass& w) {
  Integer g = 0;
  NumClass y;
  for (std::size_t i = 0; i < kLatticeRank; ++i) {
    if (w[i] == 0) {
      continue;
    }
    if (g != 0 && mpz_divisible_p(w[i].get_mpz_t(), g.get_mpz_t())) {
      continue;
    }
    Integer ng, s, t;
    mpz_gcdext(ng.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
    y *= s;
    y[i] = t;
    g = ng;
  }
  return {g, y};
}

}  // namespace

std::optional<NumClass> solve_pairing(const NumClass& x, const Integer& target) {
  const NumClass w = dual(x);
  auto [g, y] = bezout(w);
  if (g == 0) {
    if (target == 0) {
      return NumClass::zero();
    }
    return std::nullopt;
  }
  if (!mpz_divisible_p(target.get_mpz_t(), g.get_mpz_t())) {
    return std::nullopt;
  }
  Integer factor;
  mpz_divexact(factor.get_mpz_t(), target.get_mpz_t(), g.get_mpz_t());
  return factor * y;
}

OrthogonalSplit orthogonal_split(const NumClass& x) {
  if (x.is_zero()) {
    throw std::invalid_argument("orthogonal_split of the zero class");
  }
  // Unimodular column reduction of the row vector w = G x.  The columns of
  // `cols` stay a basis of Z^10 throughout and w.cols[i] == w_cur[i].
  NumClass w = dual(x);
  std::array<NumClass, kLatticeRank> cols;
  for (std::size_t i = 0; i < kLatticeRank; ++i) {
    cols[i][i] = 1;
  }
  for (;;) {
    std::size_t pivot = kLatticeRank;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < kLatticeRank; ++i) {
      if (w[i] == 0) {
        continue;
      }
      ++nonzero;
      if (pivot == kLatticeRank || abs(w[i]) < abs(w[pivot])) {
        pivot = i;
      }
    }
    if (nonzero == 1) {
      OrthogonalSplit split;
      split.divisor = abs(w[pivot]);
      split.unit = w[pivot] > 0 ? cols[pivot] : -cols[pivot];
      for (std::size_t i = 0; i < kLatticeRank; ++i) {
        if (i != pivot) {
          split.complement.push_back(cols[i]);
        }
      }
      return split;
    }
    for (std::size_t i = 0; i < kLatticeRank; ++i) {
      if (i == pivot || w[i] == 0) {
        continue;
      }
      const Integer q = floor_div(w[i], w[pivot]);
      w[i] -= q * w[pivot];
      cols[i] -= q * cols[pivot];
    }
  }
}

}  // namespace enriques
