#include "limitstab/charge.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace limitstab {

ChernCharacter& ChernCharacter::operator+=(const ChernCharacter& rhs) {
  if (rhs.gamma.size() != gamma.size()) throw std::invalid_argument("Chern character rank mismatch");
  r += rhs.r;
  c += rhs.c;
  for (std::size_t i = 0; i < gamma.size(); ++i) gamma[i] += rhs.gamma[i];
  n += rhs.n;
  return *this;
}

ChernCharacter operator*(const Rational& s, ChernCharacter a) {
  a.r *= s;
  a.c *= s;
  for (auto& g : a.gamma) g *= s;
  a.n *= s;
  return a;
}

std::vector<Rational> to_rational(const CurveClass& beta) {
  std::vector<Rational> out;
  out.reserve(beta.rank());
  for (auto a : beta.coeffs()) out.emplace_back(a);
  return out;
}

ChernCharacter ch_of_pair(const CurveClass& beta, std::int64_t n) {
  return ChernCharacter{Rational(-1), Rational(0), to_rational(beta), Rational(n)};
}

ChernCharacter sheaf_class(const CurveClass& beta, const Rational& n) {
  return ChernCharacter{Rational(0), Rational(0), to_rational(beta), n};
}

ChernCharacter point_class(std::size_t rank, const Rational& n) {
  return ChernCharacter{Rational(0), Rational(0), std::vector<Rational>(rank), n};
}

ClassShape shape_of(const ChernCharacter& ch) {
  const bool gamma_zero = std::all_of(ch.gamma.begin(), ch.gamma.end(), [](const Rational& g) { return g == 0; });
  const bool gamma_effective =
      std::all_of(ch.gamma.begin(), ch.gamma.end(), [](const Rational& g) { return g >= 0; });
  if (ch.c != 0) return ClassShape::Other;
  if (ch.r == 0) {
    if (gamma_zero) {
      if (ch.n == 0) return ClassShape::Zero;
      return ch.n > 0 ? ClassShape::Point : ClassShape::Other;
    }
    return gamma_effective ? ClassShape::Sheaf : ClassShape::Other;
  }
  if (ch.r == -1 && gamma_effective) return ClassShape::Pair;
  return ClassShape::Other;
}

std::string_view to_string(ClassShape shape) {
  switch (shape) {
    case ClassShape::Zero: return "zero";
    case ClassShape::Point: return "point";
    case ClassShape::Sheaf: return "sheaf";
    case ClassShape::Pair: return "pair";
    case ClassShape::Other: return "other";
  }
  return "other";
}

TwistedInvariants twisted_invariants(const NumericalThreefold& X, const ChernCharacter& ch, const Rational& k) {
  const Rational w3 = X.omega_cubed();
  const Rational td = X.c2_omega() / 24;
  const Rational d = degree(X, ch.gamma);
  TwistedInvariants v;
  v.v0 = ch.r;
  v.w1 = (ch.c - k * ch.r) * w3;
  v.w2 = d - k * ch.c * w3 + k * k * ch.r * w3 / 2 + ch.r * td;
  v.v3 = ch.n - k * d + k * k * ch.c * w3 / 2 - k * k * k * ch.r * w3 / 6 + (ch.c - k * ch.r) * td;
  return v;
}

ChargePolynomial charge_polynomial(const NumericalThreefold& X, const ChernCharacter& ch, const Rational& k) {
  const TwistedInvariants v = twisted_invariants(X, ch, k);
  return ChargePolynomial{
      Polynomial{-v.v3, Rational(0), v.w1 / 2},
      Polynomial{Rational(0), v.w2, Rational(0), -X.omega_cubed() * v.v0 / 6},
  };
}

ChernCharacter dual(const ChernCharacter& ch) {
  return ChernCharacter{ch.r, -ch.c, ch.gamma, -ch.n};
}

Slope slope(const NumericalThreefold& X, const ChernCharacter& ch_f, const Rational& k) {
  if (ch_f.r != 0 || ch_f.c != 0) {
    throw std::invalid_argument("slope: " + format_chern(ch_f) + " is not a sheaf class of dimension <= 1");
  }
  const Rational d = degree(X, ch_f.gamma);
  if (d > 0) return (ch_f.n - k * d) / d;
  const bool gamma_zero = std::all_of(ch_f.gamma.begin(), ch_f.gamma.end(), [](const Rational& g) { return g == 0; });
  if (gamma_zero && ch_f.n > 0) return PointSlope{};
  throw std::invalid_argument("slope: " + format_chern(ch_f) + " is not a nonzero sheaf class");
}

Rational slope_iomega(const NumericalThreefold& X, const ChernCharacter& ch_f) {
  const Slope s = slope(X, ch_f, Rational(0));
  if (std::holds_alternative<PointSlope>(s)) {
    throw std::invalid_argument("slope_iomega: point class has no finite slope");
  }
  return std::get<Rational>(s);
}

std::string format_chern(const ChernCharacter& ch) {
  std::string out = "(" + format_rational(ch.r) + ", " + format_rational(ch.c) + ", [";
  for (std::size_t i = 0; i < ch.gamma.size(); ++i) {
    if (i) out += ", ";
    out += format_rational(ch.gamma[i]);
  }
  return out + "], " + format_rational(ch.n) + ")";
}

ChernCharacter parse_chern(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  auto fail = [&]() -> std::invalid_argument {
    return std::invalid_argument("malformed Chern character \"" + std::string(text) +
                                 "\", expected (r, c, [g1, ...], n)");
  };
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw fail();
  s = s.substr(1, s.size() - 2);

  std::vector<Rational> gamma;
  std::vector<std::string> fields;
  const auto lb = s.find('[');
  if (lb != std::string::npos) {
    const auto rb = s.find(']', lb);
    if (rb == std::string::npos) throw fail();
    const std::string inner = s.substr(lb + 1, rb - lb - 1);
    std::size_t start = 0;
    while (!inner.empty() && start <= inner.size()) {
      const auto comma = inner.find(',', start);
      const auto end = comma == std::string::npos ? inner.size() : comma;
      gamma.push_back(parse_rational(inner.substr(start, end - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    const std::string head = s.substr(0, lb);
    const std::string tail = s.substr(rb + 1);
    // head "r,c,"  tail ",n"
    if (head.size() < 1 || head.back() != ',' || tail.size() < 2 || tail.front() != ',') throw fail();
    const std::string rc = head.substr(0, head.size() - 1);
    const auto comma = rc.find(',');
    if (comma == std::string::npos) throw fail();
    return ChernCharacter{parse_rational(rc.substr(0, comma)), parse_rational(rc.substr(comma + 1)), gamma,
                          parse_rational(tail.substr(1))};
  }

  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto end = comma == std::string::npos ? s.size() : comma;
    fields.push_back(s.substr(start, end - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (fields.size() < 3) throw fail();
  ChernCharacter out;
  out.r = parse_rational(fields.front());
  out.c = parse_rational(fields[1]);
  out.n = parse_rational(fields.back());
  for (std::size_t i = 2; i + 1 < fields.size(); ++i) out.gamma.push_back(parse_rational(fields[i]));
  return out;
}

}  // namespace limitstab
