#pragma once

#include "limitstab/geometry.hpp"
#include "limitstab/polynomial.hpp"

#include <string>
#include <variant>
#include <vector>

namespace limitstab {

/// Scalar-reduced Chern character (ch0, ch1, ch2, ch3).
///
/// ch1 lives on the line Q.omega, so only its coefficient c is kept; ch2
/// is a curve class with rational coordinates.
struct ChernCharacter {
  Rational r;                  // ch0
  Rational c;                  // ch1 = c * omega
  std::vector<Rational> gamma; // ch2
  Rational n;                  // ch3

  ChernCharacter& operator+=(const ChernCharacter& rhs);
  friend ChernCharacter operator+(ChernCharacter a, const ChernCharacter& b) { return a += b; }
  friend ChernCharacter operator*(const Rational& s, ChernCharacter a);
  friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;
};

std::vector<Rational> to_rational(const CurveClass& beta);

/// (-1, 0, beta, n): the class of a stable-pair complex.
ChernCharacter ch_of_pair(const CurveClass& beta, std::int64_t n);
/// (0, 0, beta, n): a sheaf supported in dimension <= 1.
ChernCharacter sheaf_class(const CurveClass& beta, const Rational& n);
/// (0, 0, 0, n).
ChernCharacter point_class(std::size_t rank, const Rational& n);

/// The class shapes the comparator understands.
enum class ClassShape {
  Zero,
  Point,  // r = c = 0, ch2 = 0, n > 0
  Sheaf,  // r = c = 0, ch2 effective and nonzero
  Pair,   // r = -1, c = 0, ch2 effective (O_X[1] when ch2 = 0, n = 0)
  Other,
};

ClassShape shape_of(const ChernCharacter& ch);
std::string_view to_string(ClassShape shape);

/// The four scalars of the twisted Mukai vector v^B = e^{-B} ch sqrt(td)
/// that Z depends on, for B = k omega:
/// v0, w1 = omega^2.v1, w2 = omega.v2, v3.
struct TwistedInvariants {
  Rational v0, w1, w2, v3;
  friend bool operator==(const TwistedInvariants&, const TwistedInvariants&) = default;
};

/// Z_{sigma_m} = re(m) + i im(m), with
/// re = -v3 + m^2 w1 / 2 and im = m w2 - m^3 omega^3 v0 / 6.
struct ChargePolynomial {
  Polynomial re;
  Polynomial im;
};

TwistedInvariants twisted_invariants(const NumericalThreefold& X, const ChernCharacter& ch, const Rational& k);
ChargePolynomial charge_polynomial(const NumericalThreefold& X, const ChernCharacter& ch, const Rational& k);

/// Numerical shadow of the derived dual: (r, c, gamma, n) -> (r, -c, gamma, -n).
ChernCharacter dual(const ChernCharacter& ch);

/// Slope of a zero-dimensional sheaf; orders above every finite slope.
struct PointSlope {
  friend bool operator==(PointSlope, PointSlope) { return true; }
};
using Slope = std::variant<Rational, PointSlope>;

/// mu_sigma(F) = (n - k deg gamma) / deg gamma for r = c = 0 and
/// deg gamma > 0; PointSlope for a point class. Throws
/// std::invalid_argument for anything else.
Slope slope(const NumericalThreefold& X, const ChernCharacter& ch_f, const Rational& k);

/// mu_{i omega}(F) = n / deg gamma, the untwisted slope of a sheaf class.
Rational slope_iomega(const NumericalThreefold& X, const ChernCharacter& ch_f);

/// "(r, c, [g1, g2], n)"
std::string format_chern(const ChernCharacter& ch);
/// Inverse of format_chern; brackets around ch2 are optional.
ChernCharacter parse_chern(std::string_view text);

}  // namespace limitstab
