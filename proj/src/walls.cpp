#include "limitstab/walls.hpp"

#include <set>
#include <stdexcept>

namespace limitstab {

bool Chamber::contains(const Rational& k) const {
  return (!lo || *lo < k) && (!hi || k < *hi);
}

std::vector<Rational> Chamber::interior_points(int count) const {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 1; i <= count; ++i) {
    if (lo && hi) {
      out.push_back(*lo + (*hi - *lo) * i / (count + 1));
    } else if (lo) {
      out.push_back(*lo + i);
    } else if (hi) {
      out.push_back(*hi - i);
    } else {
      out.push_back(Rational(i - 1));
    }
  }
  return out;
}

namespace {

void check_beta(const NumericalThreefold& X, const CurveClass& beta) {
  X.check_rank(beta);
  if (!beta.is_effective()) throw std::invalid_argument("class " + to_string(beta) + " is not effective");
  if (beta.is_zero()) throw std::invalid_argument("curve class must be nonzero");
}

}  // namespace

WallSet wall_set(const NumericalThreefold& X, const CurveClass& beta, const Rational& k_lo, const Rational& k_hi) {
  check_beta(X, beta);
  if (!(k_lo < k_hi)) {
    throw std::invalid_argument("empty interval [" + format_rational(k_lo) + ", " + format_rational(k_hi) + "]");
  }
  std::set<Rational> walls;
  std::set<Rational> seen_degrees;
  for (const auto& gamma : effective_below(X, beta)) {
    if (gamma.is_zero()) continue;
    const Rational step = 1 / (2 * degree(X, gamma));
    if (!seen_degrees.insert(step).second) continue;
    // walls m * step with k_lo <= m * step <= k_hi
    for (Integer m = ceil_of(k_lo / step), last = floor_of(k_hi / step); m <= last; ++m) {
      walls.insert(Rational(m) * step);
    }
  }
  return WallSet{beta, k_lo, k_hi, std::vector<Rational>(walls.begin(), walls.end())};
}

bool is_wall(const NumericalThreefold& X, const CurveClass& beta, const Rational& k) {
  check_beta(X, beta);
  for (const auto& gamma : effective_below(X, beta)) {
    if (gamma.is_zero()) continue;
    if (is_integer(2 * degree(X, gamma) * k)) return true;
  }
  return false;
}

Rational mu_threshold(const NumericalThreefold& X, const CurveClass& beta, std::int64_t n) {
  check_beta(X, beta);
  std::optional<Rational> best;
  for (const auto& [first, second] : decompositions(X, beta)) {
    const Rational candidate = (Rational(n) - min_ch3(X, second)) / degree(X, first);
    if (!best || candidate > *best) best = candidate;
  }
  return *best;  // (beta, 0) is always a decomposition
}

PtBounds pt_bounds(const NumericalThreefold& X, const CurveClass& beta, std::int64_t n) {
  return PtBounds{-mu_threshold(X, beta, n) / 2, mu_threshold(X, beta, -n) / 2};
}

std::vector<Chamber> chambers(const NumericalThreefold& X, const CurveClass& beta, const Rational& k_lo,
                              const Rational& k_hi) {
  const WallSet ws = wall_set(X, beta, k_lo, k_hi);
  std::vector<Chamber> out;
  Rational prev = k_lo;
  for (const auto& w : ws.walls) {
    if (w <= k_lo || w >= k_hi) continue;
    out.push_back(Chamber{prev, w});
    prev = w;
  }
  out.push_back(Chamber{prev, k_hi});
  return out;
}

}  // namespace limitstab
