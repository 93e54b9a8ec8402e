#pragma once

#include "limitstab/geometry.hpp"

#include <optional>
#include <vector>

namespace limitstab {

/// Walls S(beta) = { m / (2 deg gamma) : 0 != gamma in N(beta), m in Z }
/// restricted to a closed interval.
struct WallSet {
  CurveClass beta;
  Rational k_lo, k_hi;
  std::vector<Rational> walls;  // strictly increasing, within [k_lo, k_hi]
};

/// Open interval between consecutive walls. An empty bound means the
/// chamber is unbounded on that side.
struct Chamber {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  bool contains(const Rational& k) const;
  /// `count` distinct interior rationals, evenly spaced for bounded
  /// chambers and stepping away from the finite end otherwise.
  std::vector<Rational> interior_points(int count) const;

  friend bool operator==(const Chamber&, const Chamber&) = default;
};

WallSet wall_set(const NumericalThreefold& X, const CurveClass& beta, const Rational& k_lo, const Rational& k_hi);

/// k in S(beta).
bool is_wall(const NumericalThreefold& X, const CurveClass& beta, const Rational& k);

/// mu_{n,beta} = max over beta = beta' + beta'' (beta' != 0) of
/// (n - m(beta'')) / deg beta'.
Rational mu_threshold(const NumericalThreefold& X, const CurveClass& beta, std::int64_t n);

/// L_{n,beta} equals P_{n,beta} for k < k_pt and P_{-n,beta} for k > k_dual.
struct PtBounds {
  Rational k_pt;    // -mu_{n,beta} / 2
  Rational k_dual;  // mu_{-n,beta} / 2
};

PtBounds pt_bounds(const NumericalThreefold& X, const CurveClass& beta, std::int64_t n);

/// Open chambers of [k_lo, k_hi] cut by the walls strictly inside it.
std::vector<Chamber> chambers(const NumericalThreefold& X, const CurveClass& beta, const Rational& k_lo,
                              const Rational& k_hi);

}  // namespace limitstab
