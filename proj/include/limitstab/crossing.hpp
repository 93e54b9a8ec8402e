#pragma once

#include "limitstab/charge.hpp"
#include "limitstab/walls.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace limitstab {

enum class WallSide { Left, Right };

std::string_view to_string(WallSide side);

/// One numerically admissible splitting at a wall k0: a one-dimensional
/// sheaf F of class (beta1, n1) and slope mu = -2 k0, and a pair-type
/// object G of class (beta2, n2), with beta1 + beta2 = beta and
/// n1 + n2 = n.
///
/// `sub_admissible` marks objects destabilized by F as a subobject when k
/// increases past k0 (n1 <= n - m(beta2)); `quotient_admissible` marks
/// objects that become stable there, with F as a quotient
/// (n1 >= n + m(beta2)).
struct WallDatum {
  Rational k0;
  CurveClass beta1;
  std::int64_t n1 = 0;
  CurveClass beta2;
  std::int64_t n2 = 0;
  bool sub_admissible = false;
  bool quotient_admissible = false;
};

struct CrossingTerm {
  WallDatum datum;
  std::optional<Rational> n_value;     // N_{n1,beta1}; empty when the table has no entry
  Rational coefficient;                // (-1)^(n1-1) n1 N_{n1,beta1}
  std::optional<Rational> l_at_wall;   // L_{n2,beta2}(sigma_0); not evaluated when coefficient = 0
  WallSide side = WallSide::Right;     // which one-sided limit stands in for sigma_0
  Rational contribution;
  bool ambiguous = false;              // both admissibility bounds hold and k0 is a wall of beta2
};

struct WallReport {
  Rational k0;
  Rational l_minus;
  Rational l_plus;
  Rational total;  // l_minus - l_plus
  std::vector<CrossingTerm> terms;
  std::vector<std::string> warnings;
};

struct ChamberValue {
  Chamber chamber;
  Rational value;
};

/// Piecewise-constant k -> L_{n,beta}(k) over [k_lo, k_hi].
struct ChamberTable {
  CurveClass beta;
  std::int64_t n = 0;
  Rational k_lo, k_hi;
  std::vector<ChamberValue> entries;  // one per chamber, ascending
  std::vector<WallReport> reports;    // one per interior wall, ascending

  /// Value in the chamber containing k. Throws std::out_of_range if k is
  /// a wall or outside the open interval.
  Rational value_at(const Rational& k) const;
  /// One-sided limit at k; equals value_at away from walls.
  Rational limit_at(const Rational& k, WallSide side) const;
  /// Adjacent chambers with equal values merged.
  std::vector<ChamberValue> collapsed() const;
  /// Walls where the value actually jumps.
  std::vector<Rational> effective_walls() const;
};

struct PtSymmetryRow {
  std::int64_t n = 0;
  PtBounds bounds;
  Rational p_n;                        // seed
  Rational p_minus_n;                  // L_{n,beta} right of every wall
  std::optional<Rational> seed_minus_n;
  Rational crossing_sum;               // sum of all wall totals
  Rational telescoping_defect;         // (p_n - p_minus_n) - crossing_sum
  std::optional<Rational> n_value;     // N_{n,beta}
  std::optional<Rational> relation_defect;  // (p_n - p_minus_n) - (-1)^(n-1) n N_{n,beta}
};

struct PtSymmetryReport {
  CurveClass beta;
  std::vector<PtSymmetryRow> rows;
  std::vector<std::int64_t> skipped;    // n in 1..n_max without a seed
  std::map<std::int64_t, Rational> laurent;  // truncated coefficients of Z^PT_beta(q)

  /// No telescoping defect and every present P_{-n} seed reproduced.
  bool consistent() const;
};

/// Wall-crossing recursion for L_{n,beta}(k omega + i omega).
///
/// The engine borrows the model, which must outlive it. Sub-tables for the
/// classes (n'', beta'') met during a recursion are memoized; the cache is
/// guarded by a mutex and entries are deterministic, so concurrent callers
/// at worst compute the same table twice.
class CrossingEngine {
 public:
  explicit CrossingEngine(const NumericalThreefold& X) : X_(X) {}

  const NumericalThreefold& model() const { return X_; }

  std::vector<WallDatum> enumerate_wall_data(const CurveClass& beta, std::int64_t n, const Rational& k0) const;

  /// L_{n2,beta2}(sigma_0). For beta2 = 0 this is 1 if n2 = 0, else 0.
  /// When k0 is itself a wall of beta2 the one-sided limit on `side` is
  /// used.
  Rational l_at_wall(const CurveClass& beta2, std::int64_t n2, const Rational& k0,
                     WallSide side = WallSide::Right);

  WallReport cross_wall(const CurveClass& beta, std::int64_t n, const Rational& k0, const Rational& l_minus);

  /// Requires k_lo < k_pt(beta, n) and a P seed for (n, beta).
  ChamberTable chamber_table(const CurveClass& beta, std::int64_t n, const Rational& k_lo, const Rational& k_hi);

  /// L_{n,beta}(k) for k off the walls of beta.
  Rational value(const CurveClass& beta, std::int64_t n, const Rational& k);

  PtSymmetryReport pt_symmetry_check(const CurveClass& beta, std::int64_t n_max);

 private:
  ChamberTable build_table(const CurveClass& beta, std::int64_t n, const Rational& k_lo, const Rational& k_hi,
                           int depth);
  WallReport cross_wall_at(const CurveClass& beta, std::int64_t n, const Rational& k0, const Rational& l_minus,
                           int depth);
  Rational l_at_wall_at(const CurveClass& beta2, std::int64_t n2, const Rational& k0, WallSide side, int depth);
  std::shared_ptr<const ChamberTable> covering_table(const CurveClass& beta, std::int64_t n, const Rational& k,
                                                     int depth);
  void remember(const ChamberTable& table);

  const NumericalThreefold& X_;
  mutable std::mutex cache_mutex_;
  std::map<ChargeKey, std::shared_ptr<const ChamberTable>> cache_;
};

/// One group of the toy Harder-Narasimhan filtration of a direct sum of
/// semistable one-dimensional sheaves.
struct HnGroup {
  Rational slope;  // mu_sigma shared by the group
  std::vector<ChernCharacter> parts;
};

/// Groups sheaf classes by mu_sigma and orders the groups by strictly
/// decreasing slope. Parts inside a group are in canonical order.
std::vector<HnGroup> hn_sort(const NumericalThreefold& X, std::vector<ChernCharacter> parts, const Rational& k);

}  // namespace limitstab
