#pragma once

#include "limitstab/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace limitstab {

/// Dense univariate polynomial with exact rational coefficients.
///
/// Coefficients are stored lowest degree first with trailing zeros
/// trimmed, so the zero polynomial has no coefficients and two equal
/// polynomials always have identical storage.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs);
  explicit Polynomial(std::vector<Rational> coeffs);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of m^i; zero past the degree.
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Zero for the zero polynomial.
  Rational leading_coeff() const;

  /// Sign of p(m) for all sufficiently large m: the sign of the leading
  /// coefficient, 0 iff p is identically zero.
  int sign_at_infinity() const;

  Rational operator()(const Rational& m) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& s) { return lhs *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial rhs) { return rhs *= s; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// "a + b*m + c*m^2"-style rendering with exact coefficients.
std::string to_string(const Polynomial& p, const std::string& var = "m");

}  // namespace limitstab
