#ifndef ENRIQUES_REDUCTION_HPP
#define ENRIQUES_REDUCTION_HPP

// Normalising Chern classes by twisting with line bundles.  For rank 4 every
// (c1, c2) can be moved to c2 = c1^2/2 + k with k in {-5..1}; for rank 2 to
// k in {0, 1}.  In both cases the final c1 is effective when its square is
// non-negative.

#include <vector>

#include "enriques/integer.hpp"
#include "enriques/lattice.hpp"

namespace enriques {

struct ChernTwist {
  PicClass c1;
  Integer c2;
  friend bool operator==(const ChernTwist&, const ChernTwist&) = default;
};

/// Chern classes of E(D) for E of rank r:
///   c1' = c1 + rD,  c2' = c2 + (r-1) c1.D + r(r-1)/2 D^2.
ChernTwist twist_chern(const Integer& r, const PicClass& c1, const Integer& c2,
                       const PicClass& d);

struct SquareReduction {
  /// S with 0 <= (L - 4S)^2 <= 54 and L - 4S > 0.
  PicClass shift;
  /// (L - 4S)^2 after the initial ample correction and after every descent
  /// step, in order.  Strictly decreasing.
  std::vector<Integer> squares;
  friend bool operator==(const SquareReduction&, const SquareReduction&) = default;
};

/// Finds S with 0 <= (L - 4S)^2 <= 54 and L - 4S nonzero effective.  A class
/// that is not already nonzero effective of non-negative square is first
/// replaced by L + 4nA for the least such n; then L - 4F is taken repeatedly
/// for a phi-minimising isotropic F while the square exceeds 54.
PicClass reduce_square(const PicClass& l);
SquareReduction reduce_square_trace(const PicClass& l);

struct ReductionResult {
  /// The twisting divisor D.
  PicClass twist_divisor;
  PicClass final_c1;
  Integer final_c2;
  /// final_c2 - final_c1^2 / 2.
  Integer k;
  /// c1 after the square-reduction twist, before the pencil adjustment.
  PicClass intermediate_c1;
  friend bool operator==(const ReductionResult&, const ReductionResult&) = default;
};

ReductionResult reduce_rank4(const PicClass& c1, const Integer& c2);

/// Rank 2 analogue: twists by multiples of 2 bring the square of c1 into
/// [0, 8] (or to a class of square 10 with phi = 3), then an isotropic twist
/// moves k into {0, 1}.
ReductionResult reduce_rank2(const PicClass& c1, const Integer& c2);

/// One row of the rank-4 dimension table: dim M = 2 c2 + dim_offset and the
/// least c2, c1^2 making that dimension non-negative.
struct TableRow {
  int k = 0;
  int dim_c2_coefficient = 2;
  int dim_offset = 0;
  Integer min_c2;
  Integer min_c1_squared;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Throws PreconditionError unless -5 <= k <= 1.
TableRow table_row(int k);
/// Rows for k = 1, 0, ..., -5.
std::vector<TableRow> constraint_table();

}  // namespace enriques

#endif  // ENRIQUES_REDUCTION_HPP
