#include "limitstab/comparator.hpp"

#include <stdexcept>

namespace limitstab {

std::string_view to_string(PhaseOrder order) {
  switch (order) {
    case PhaseOrder::Precedes: return "precedes";
    case PhaseOrder::Equal: return "equal";
    case PhaseOrder::Succeeds: return "succeeds";
  }
  return "equal";
}

PhaseOrder reversed(PhaseOrder order) {
  switch (order) {
    case PhaseOrder::Precedes: return PhaseOrder::Succeeds;
    case PhaseOrder::Succeeds: return PhaseOrder::Precedes;
    case PhaseOrder::Equal: return PhaseOrder::Equal;
  }
  return order;
}

namespace {

void require_in_scope(const ChernCharacter& ch, const char* role) {
  const ClassShape s = shape_of(ch);
  if (s == ClassShape::Zero) {
    throw std::invalid_argument(std::string(role) + " is the zero class");
  }
  if (s == ClassShape::Other) {
    throw std::invalid_argument(std::string(role) + " " + format_chern(ch) +
                                " is not a point, sheaf or pair class");
  }
}

}  // namespace

Polynomial phase_determinant(const NumericalThreefold& X, const ChernCharacter& ch_f, const ChernCharacter& ch_e,
                             const Rational& k) {
  const ChargePolynomial zf = charge_polynomial(X, ch_f, k);
  const ChargePolynomial ze = charge_polynomial(X, ch_e, k);
  return zf.re * ze.im - zf.im * ze.re;
}

PhaseOrder compare_phases(const NumericalThreefold& X, const ChernCharacter& ch_f, const ChernCharacter& ch_e,
                          const Rational& k) {
  require_in_scope(ch_f, "F");
  require_in_scope(ch_e, "E");
  const int s = phase_determinant(X, ch_f, ch_e, k).sign_at_infinity();
  if (s > 0) return PhaseOrder::Precedes;
  if (s < 0) return PhaseOrder::Succeeds;
  return PhaseOrder::Equal;
}

ClosedFormSides closed_form_sides(const NumericalThreefold& X, const ChernCharacter& ch_f,
                                  const ChernCharacter& ch_e, const Rational& k) {
  const ClassShape sf = shape_of(ch_f);
  if (sf != ClassShape::Sheaf && sf != ClassShape::Point) {
    throw std::invalid_argument("closed-form comparison needs a sheaf or point class F, got " + format_chern(ch_f));
  }
  if (shape_of(ch_e) != ClassShape::Pair) {
    throw std::invalid_argument("closed-form comparison needs a pair class E, got " + format_chern(ch_e));
  }
  ClosedFormSides out;
  if (sf == ClassShape::Point) {
    out.point = true;
    return out;
  }
  const TwistedInvariants ve = twisted_invariants(X, ch_e, k);
  out.mu_iomega = slope_iomega(X, ch_f);
  out.bound = -2 * k;
  out.mu_sigma = out.mu_iomega - k;
  out.tie_lhs = ve.w2 * out.mu_sigma;
  out.tie_rhs = ve.v3;
  return out;
}

PhaseOrder compare_phases_closed(const NumericalThreefold& X, const ChernCharacter& ch_f,
                                 const ChernCharacter& ch_e, const Rational& k) {
  const ClosedFormSides s = closed_form_sides(X, ch_f, ch_e, k);
  if (s.point) return PhaseOrder::Succeeds;
  if (s.mu_iomega < s.bound) return PhaseOrder::Precedes;
  if (s.mu_iomega > s.bound) return PhaseOrder::Succeeds;
  if (s.tie_lhs < s.tie_rhs) return PhaseOrder::Precedes;
  if (s.tie_lhs > s.tie_rhs) return PhaseOrder::Succeeds;
  return PhaseOrder::Equal;
}

Rational phase_limit(const ChernCharacter& ch) {
  switch (shape_of(ch)) {
    case ClassShape::Point: return Rational(1);
    case ClassShape::Sheaf:
    case ClassShape::Pair: return Rational(1, 2);
    case ClassShape::Zero: throw std::invalid_argument("phase_limit: zero class");
    case ClassShape::Other: break;
  }
  throw std::invalid_argument("phase_limit: " + format_chern(ch) + " is not a point, sheaf or pair class");
}

Rational destabilizing_threshold(const NumericalThreefold& X, const ChernCharacter& ch_f) {
  if (shape_of(ch_f) != ClassShape::Sheaf) {
    throw std::invalid_argument("destabilizing_threshold: " + format_chern(ch_f) +
                                " is not a sheaf class of positive degree");
  }
  return -slope_iomega(X, ch_f) / 2;
}

}  // namespace limitstab
