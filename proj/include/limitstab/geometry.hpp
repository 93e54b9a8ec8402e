#pragma once

#include "limitstab/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace limitstab {

/// Raised for invalid or incomplete model data (bad tables, missing
/// m(beta) entries, missing PT seeds, parse failures).
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integral curve class over the model's curve basis.
///
/// The effective cone is simplicial: a class is effective iff every
/// coordinate is nonnegative.
class CurveClass {
 public:
  CurveClass() = default;
  explicit CurveClass(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {}

  static CurveClass zero(std::size_t rank) { return CurveClass(std::vector<std::int64_t>(rank, 0)); }

  std::size_t rank() const { return coeffs_.size(); }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const;
  bool is_effective() const;
  /// Coordinatewise <=, i.e. other - *this is effective.
  bool dominated_by(const CurveClass& other) const;

  CurveClass& operator+=(const CurveClass& rhs);
  CurveClass& operator-=(const CurveClass& rhs);
  friend CurveClass operator+(CurveClass a, const CurveClass& b) { return a += b; }
  friend CurveClass operator-(CurveClass a, const CurveClass& b) { return a -= b; }
  friend CurveClass operator*(std::int64_t s, CurveClass a);

  friend auto operator<=>(const CurveClass&, const CurveClass&) = default;
  friend bool operator==(const CurveClass&, const CurveClass&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// "(a,b,...)"
std::string to_string(const CurveClass& c);

struct BasisCurve {
  std::string name;
  Rational degree;  // omega . C_i

  friend bool operator==(const BasisCurve&, const BasisCurve&) = default;
};

/// (n, beta) index of the N and P tables.
struct ChargeKey {
  std::int64_t n = 0;
  CurveClass beta;

  friend auto operator<=>(const ChargeKey&, const ChargeKey&) = default;
  friend bool operator==(const ChargeKey&, const ChargeKey&) = default;
};

/// Raw model contents, as read from a file or produced by a preset.
struct ThreefoldData {
  std::string name;
  std::vector<BasisCurve> basis;
  Rational omega_cubed{1};
  Rational c2_omega{0};
  std::map<CurveClass, Rational> m_table;  // nonzero classes only; m(0) = 0 is implicit
  std::map<ChargeKey, Rational> n_table;
  std::map<ChargeKey, Rational> p_seed;

  friend bool operator==(const ThreefoldData&, const ThreefoldData&) = default;
};

/// Validated, immutable numerical Calabi-Yau 3-fold model.
class NumericalThreefold {
 public:
  /// Throws ModelError naming the first violated invariant.
  explicit NumericalThreefold(ThreefoldData data);

  const ThreefoldData& data() const { return data_; }
  const std::string& name() const { return data_.name; }
  std::size_t rank() const { return data_.basis.size(); }
  const Rational& omega_cubed() const { return data_.omega_cubed; }
  const Rational& c2_omega() const { return data_.c2_omega; }

  std::optional<Rational> m_entry(const CurveClass& beta) const;
  std::optional<Rational> n_entry(std::int64_t n, const CurveClass& beta) const;
  std::optional<Rational> p_seed(std::int64_t n, const CurveClass& beta) const;

  /// Throws std::invalid_argument if beta's rank differs from the model's.
  void check_rank(const CurveClass& beta) const;

 private:
  ThreefoldData data_;
};

Rational degree(const NumericalThreefold& X, const CurveClass& gamma);
/// Degree of a rational-coefficient class (ch2 of a Chern character).
Rational degree(const NumericalThreefold& X, std::span<const Rational> gamma);

/// N(beta): every effective class of degree at most deg(beta), zero
/// included. Sorted by (degree, coefficients).
std::vector<CurveClass> effective_below(const NumericalThreefold& X, const CurveClass& beta);

/// m(beta): 0 for beta = 0, otherwise the minimum of the m-table over the
/// nonzero classes of N(beta). A missing entry is a ModelError.
Rational min_ch3(const NumericalThreefold& X, const CurveClass& beta);

/// Ordered splittings beta = beta' + beta'' with beta' != 0 and both
/// effective. Sorted by (deg beta', beta').
std::vector<std::pair<CurveClass, CurveClass>> decompositions(const NumericalThreefold& X,
                                                              const CurveClass& beta);

}  // namespace limitstab
