#include "enriques/walls.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>

#include "enriques/enumeration.hpp"
#include "enriques/errors.hpp"
#include "enriques/quadratic_form.hpp"

namespace enriques {

namespace {

void require_ample(const NumClass& h) {
  if (!is_ample(h)) {
    throw PreconditionError("polarization must be ample");
  }
}

// Early-exit variant of walls_through: true iff some wall passes through h.
bool has_wall(const NumClass& h, const Integer& bound) {
  const std::vector<NumClass> basis = lll_reduce_negative(orthogonal_split(h).complement);
  const auto form = PositiveForm::decompose(negated_gram(basis));
  const bool finished = form->enumerate_symmetric(
      Rational(bound), [](std::span<const Integer>, const Rational&) { return false; });
  return !finished;
}

// Exhaustive search for delta with |delta_i| <= s and xi.delta != 0 for every
// xi in `walls`.  A wall is tested as soon as every coordinate its linear
// form G xi involves has been fixed.  Values are tried as 0, 1, -1, 2, ...
class PerturbationSearch {
 public:
  explicit PerturbationSearch(const std::vector<NumClass>& walls) : by_level_(kLatticeRank) {
    std::vector<std::array<std::int64_t, kLatticeRank>> raw;
    raw.reserve(walls.size());
    for (const NumClass& xi : walls) {
      const NumClass form = dual(xi);
      std::array<std::int64_t, kLatticeRank> row{};
      for (std::size_t j = 0; j < kLatticeRank; ++j) {
        if (!fits_int64(form[j]) || abs(form[j]) > kMaxCoefficient) {
          throw PreconditionError("find_generic_near: wall coefficients too large");
        }
        row[j] = to_int64(form[j]);
      }
      raw.push_back(row);
    }
    choose_order(raw);
    // Store every form permuted into search order and file it under the
    // level at which its last nonzero entry is fixed.
    for (const auto& row : raw) {
      std::array<std::int64_t, kLatticeRank> permuted{};
      std::size_t last = 0;
      for (std::size_t level = 0; level < kLatticeRank; ++level) {
        permuted[level] = row[order_[level]];
        if (permuted[level] != 0) {
          last = level;
        }
      }
      by_level_[last].push_back(forms_.size());
      forms_.push_back(permuted);
    }
  }

  enum class Outcome { found, infeasible, gave_up };

  /// Looks for delta with sup-norm at most s, visiting at most `budget`
  /// search nodes.
  Outcome run(std::int64_t s, std::int64_t budget) {
    bound_ = s;
    budget_ = budget;
    switch (descend(0)) {
      case Step::found:
        return Outcome::found;
      case Step::gave_up:
        return Outcome::gave_up;
      case Step::dead_end:
        break;
    }
    return Outcome::infeasible;
  }

  /// Takes the first admissible value at every coordinate.  A wall rules out
  /// at most one value per coordinate, so this never backtracks.
  void greedy() {
    bound_ = static_cast<std::int64_t>(forms_.size()) + 1;
    budget_ = -1;
    descend(0);
  }

  NumClass delta() const {
    NumClass out;
    for (std::size_t level = 0; level < kLatticeRank; ++level) {
      out[order_[level]] = Integer(static_cast<long>(delta_[level]));
    }
    return out;
  }

  static constexpr std::int64_t kMaxCoefficient = 1L << 20;

 private:
  enum class Step { found, dead_end, gave_up };

  Step descend(std::size_t j) {
    if (j == kLatticeRank) {
      return Step::found;
    }
    if (budget_ == 0) {
      return Step::gave_up;
    }
    if (budget_ > 0) {
      --budget_;
    }
    for (std::int64_t step = 0; step <= 2 * bound_; ++step) {
      delta_[j] = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
      if (!admissible(j)) {
        continue;
      }
      const Step next = descend(j + 1);
      if (next != Step::dead_end) {
        return next;
      }
    }
    delta_[j] = 0;
    return Step::dead_end;
  }

  // Coordinates are fixed greedily: next comes the one that completes the
  // support of the most forms, so that walls prune the search early.  Ties
  // go to the lowest index.
  void choose_order(const std::vector<std::array<std::int64_t, kLatticeRank>>& raw) {
    std::array<bool, kLatticeRank> used{};
    for (std::size_t level = 0; level < kLatticeRank; ++level) {
      std::size_t best = kLatticeRank;
      std::size_t best_count = 0;
      for (std::size_t c = 0; c < kLatticeRank; ++c) {
        if (used[c]) {
          continue;
        }
        std::size_t count = 0;
        for (const auto& row : raw) {
          if (row[c] == 0) {
            continue;
          }
          bool inside = true;
          for (std::size_t i = 0; i < kLatticeRank && inside; ++i) {
            inside = i == c || used[i] || row[i] == 0;
          }
          count += inside ? 1 : 0;
        }
        if (best == kLatticeRank || count > best_count) {
          best = c;
          best_count = count;
        }
      }
      used[best] = true;
      order_[level] = best;
    }
  }

  bool admissible(std::size_t j) const {
    for (const std::size_t w : by_level_[j]) {
      std::int64_t value = 0;
      for (std::size_t i = 0; i <= j; ++i) {
        value += forms_[w][i] * delta_[i];
      }
      if (value == 0) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::array<std::int64_t, kLatticeRank>> forms_;
  std::vector<std::vector<std::size_t>> by_level_;
  std::array<std::size_t, kLatticeRank> order_{};
  std::array<std::int64_t, kLatticeRank> delta_{};
  std::int64_t bound_ = 0;
  /// Remaining search nodes; negative means unlimited.
  std::int64_t budget_ = -1;
};

Integer sup_norm(const NumClass& x) {
  Integer best = 0;
  for (const Integer& c : x.coords()) {
    best = std::max(best, Integer(abs(c)));
  }
  return best;
}

// Search nodes spent on the exact sup-norm scan before falling back.
constexpr std::int64_t kPerturbationBudget = 200'000;

}  // namespace

Integer wall_norm_bound(const MukaiVector& v) {
  const Integer& r = v.rank();
  if (r < 2) {
    throw PreconditionError("walls are defined for rank at least 2");
  }
  const Integer v2 = mukai_square(v);
  if (v2 <= -r * r) {
    throw PreconditionError("walls need v^2 > -r^2");
  }
  return floor(make_rational(r * r * (v2 + r * r), 4));
}

WallReport walls_through(const NumClass& h, const MukaiVector& v) {
  require_ample(h);
  const Integer bound = wall_norm_bound(v);
  WallReport report{v, h, {}, false, -bound};
  if (bound > 0) {
    report.walls = short_vectors(ShortVectorQuery{orthogonal_split(h).complement, bound});
  }
  report.generic = report.walls.empty();
  return report;
}

bool is_generic(const NumClass& h, const MukaiVector& v) {
  require_ample(h);
  const Integer bound = wall_norm_bound(v);
  return bound <= 0 || !has_wall(h, bound);
}

NumClass find_generic_near(const NumClass& h, const MukaiVector& v, const Integer& radius) {
  require_ample(h);
  if (radius < 0) {
    throw PreconditionError("find_generic_near: radius must be non-negative");
  }
  const WallReport here = walls_through(h, v);
  if (here.generic) {
    return h;
  }
  // Perturbations are scanned by increasing sup-norm.  The scan is exact
  // but its cost grows quickly with the norm, so once it exceeds its node
  // budget the greedy perturbation is used instead, provided it fits.
  PerturbationSearch search(here.walls);
  bool settled = false;
  std::int64_t budget = kPerturbationBudget;
  for (Integer s = 1; s <= radius && budget > 0; ++s) {
    const auto outcome = search.run(to_int64(s), budget);
    if (outcome == PerturbationSearch::Outcome::found) {
      settled = true;
      break;
    }
    if (outcome == PerturbationSearch::Outcome::gave_up) {
      budget = 0;
    }
  }
  if (!settled && budget == 0) {
    search.greedy();
    settled = sup_norm(search.delta()) <= radius;
  }
  if (!settled) {
    throw SearchFailure("no generic polarization within radius " + radius.get_str());
  }
  const NumClass delta = search.delta();

  // If xi.(nH + delta) = 0 with xi.H != 0, Cauchy-Schwarz on H^perp gives
  // n <= |H.delta|/H^2 + sqrt((B + 1)(-delta_perp^2)).  Past that scale the
  // only candidates are walls through H, and delta misses all of them.
  const Integer bound = -here.square_bound;
  const Integer h2 = square(h);
  const Integer hd = pair(h, delta);
  const Rational perp2 = Rational(square(delta)) - make_rational(hd * hd, h2);
  const Integer radicand = ceil(Rational(bound + 1) * -perp2);
  const Integer safe = isqrt(radicand) + 1 + ceil_div(abs(hd), h2) + 1;

  auto admissible = [&](const Integer& n) {
    const NumClass candidate = n * h + delta;
    return is_ample(candidate) && !has_wall(candidate, bound);
  };
  for (Integer n = 1; n < safe; n *= 2) {
    if (admissible(n)) {
      return n * h + delta;
    }
  }
  for (Integer n = safe;; ++n) {
    const NumClass candidate = n * h + delta;
    if (!is_ample(candidate)) {
      continue;
    }
    if (has_wall(candidate, bound)) {
      throw std::logic_error("find_generic_near: scale bound failed");
    }
    return candidate;
  }
}

}  // namespace enriques
