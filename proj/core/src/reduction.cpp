#include "enriques/reduction.hpp"

#include <optional>
#include <stdexcept>

#include "enriques/enumeration.hpp"
#include "enriques/errors.hpp"

namespace enriques {

ChernTwist twist_chern(const Integer& r, const PicClass& c1, const Integer& c2,
                       const PicClass& d) {
  const Integer cd = pair(c1, d);
  const Integer dd = square(d);
  return ChernTwist{c1 + r * d, c2 + (r - 1) * cd + (r * (r - 1) / 2) * dd};
}

namespace {

bool nonzero_effective(const PicClass& x) { return !x.num.is_zero() && is_effective(x); }

// Descent of L - factor*S.  Steps by a phi witness while the square exceeds
// `upper` and the step keeps the square non-negative.
SquareReduction descend(const PicClass& l, const Integer& factor, const Integer& upper) {
  SquareReduction out;
  PicClass current = l;
  if (!(nonzero_effective(current) && square(current) >= 0)) {
    const NumClass& a = reference_ample();
    Integer n = 1;
    for (;; ++n) {
      const NumClass candidate = current.num + (factor * n) * a;
      if (in_positive_cone(candidate)) {
        break;
      }
    }
    out.shift = PicClass(-n * a);
    current = l - factor * out.shift;
  }
  out.squares.push_back(square(current));

  for (;;) {
    const Integer sq = square(current);
    if (sq <= upper) {
      break;
    }
    const PhiResult ph = phi(current.num);
    if (2 * factor * ph.value > sq) {
      break;
    }
    out.shift += PicClass(ph.witness);
    current -= factor * PicClass(ph.witness);
    const Integer next = square(current);
    if (next < 0 || next >= sq || !nonzero_effective(current)) {
      throw std::logic_error("square reduction failed to descend");
    }
    out.squares.push_back(next);
  }
  return out;
}

// Smallest |n| (ties to n >= 0) with lo <= k0 - n*q <= hi, q > 0.
std::optional<Integer> window_step(const Integer& k0, const Integer& q, const Integer& lo,
                                   const Integer& hi) {
  const Integer nmin = ceil_div(k0 - hi, q);
  const Integer nmax = floor_div(k0 - lo, q);
  if (nmin > nmax) {
    return std::nullopt;
  }
  if (nmin <= 0 && 0 <= nmax) {
    return Integer(0);
  }
  return nmin > 0 ? nmin : nmax;
}

Integer k_of(const ChernTwist& t) { return t.c2 - square(t.c1) / 2; }

ReductionResult reduce(const Integer& rank, const PicClass& c1, const Integer& c2,
                       const Integer& upper, const Integer& lo, const Integer& hi) {
  const SquareReduction sq = descend(c1, rank, upper);
  PicClass d = -sq.shift;
  const ChernTwist mid = twist_chern(rank, c1, c2, d);
  const NumClass& m = mid.c1.num;
  const Integer m2 = square(m);

  ChernTwist base = mid;
  NumClass pencil;
  Integer q;
  if (m2 > 0) {
    const PhiResult ph = phi(m);
    pencil = ph.witness;
    q = ph.value;
  } else {
    // c1 = m H with H a primitive half-pencil; bring the multiple down to
    // j in {1..rank} and pair against a companion pencil F with H.F = 1.
    const Integer mult = content(m);
    const NumClass h = primitive_part(m);
    Integer j = mod(mult, rank);
    if (j == 0) {
      j = rank;
    }
    const PicClass down(-((mult - j) / rank) * h);
    d += down;
    base = twist_chern(rank, mid.c1, mid.c2, down);
    pencil = companion_pencil(h);
    q = j;
  }

  const Integer k0 = k_of(base);
  if (const auto n = window_step(k0, q, lo, hi)) {
    d += *n * PicClass(pencil);
  } else {
    // Only reachable in rank 2 when the pencil pairs to 3: twist by
    // alpha F - G with G.F = 1, which moves k by alpha (q - 2) - c1.G.
    const NumClass g = companion_pencil(pencil);
    const Integer cg = pair(base.c1.num, g);
    const Integer step = q - 2;
    const auto alpha = window_step(k0 + cg, step, lo, hi);
    if (!alpha || rank != 2) {
      throw std::logic_error("no twist lands k in the target window");
    }
    d += PicClass(*alpha * pencil - g);
  }

  const ChernTwist fin = twist_chern(rank, c1, c2, d);
  ReductionResult out{d, fin.c1, fin.c2, k_of(fin), mid.c1};
  if (out.k < lo || out.k > hi) {
    throw std::logic_error("reduction left k outside its window");
  }
  if (square(out.final_c1) >= 0 && !nonzero_effective(out.final_c1)) {
    throw std::logic_error("reduction produced a non-effective c1 of non-negative square");
  }
  return out;
}

}  // namespace

SquareReduction reduce_square_trace(const PicClass& l) {
  SquareReduction out = descend(l, Integer(4), Integer(54));
  if (out.squares.back() > 54) {
    throw std::logic_error("square reduction stopped above 54");
  }
  return out;
}

PicClass reduce_square(const PicClass& l) { return reduce_square_trace(l).shift; }

ReductionResult reduce_rank4(const PicClass& c1, const Integer& c2) {
  return reduce(Integer(4), c1, c2, Integer(54), Integer(-5), Integer(1));
}

ReductionResult reduce_rank2(const PicClass& c1, const Integer& c2) {
  return reduce(Integer(2), c1, c2, Integer(8), Integer(0), Integer(1));
}

TableRow table_row(int k) {
  if (k < -5 || k > 1) {
    throw PreconditionError("table_row: k must lie in -5..1");
  }
  TableRow row;
  row.k = k;
  row.dim_offset = 6 * k - 15;
  row.min_c2 = ceil_div(Integer(15 - 6 * k), Integer(2));
  row.min_c1_squared = 2 * (row.min_c2 - k);
  return row;
}

std::vector<TableRow> constraint_table() {
  std::vector<TableRow> rows;
  for (int k = 1; k >= -5; --k) {
    rows.push_back(table_row(k));
  }
  return rows;
}

}  // namespace enriques
