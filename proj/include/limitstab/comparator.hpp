#pragma once

#include "limitstab/charge.hpp"

#include <string_view>

namespace limitstab {

/// Asymptotic order of phi_sigma(F) against phi_sigma(E) as m -> infinity.
enum class PhaseOrder { Precedes, Equal, Succeeds };

std::string_view to_string(PhaseOrder order);
PhaseOrder reversed(PhaseOrder order);

/// W(m) = re_F(m) im_E(m) - im_F(m) re_E(m).
///
/// For both phases inside a window of width < 1, W(m) equals
/// |Z_F||Z_E| sin(pi (phi_E - phi_F)), so its sign at infinity decides the
/// phase order.
Polynomial phase_determinant(const NumericalThreefold& X, const ChernCharacter& ch_f, const ChernCharacter& ch_e,
                             const Rational& k);

/// Sign-at-infinity comparison. Both classes must be nonzero and of
/// point, sheaf or pair shape; otherwise std::invalid_argument.
PhaseOrder compare_phases(const NumericalThreefold& X, const ChernCharacter& ch_f, const ChernCharacter& ch_e,
                          const Rational& k);

/// The two inequalities used by the closed-form comparison of a
/// sheaf/point class F against a pair class E.
struct ClosedFormSides {
  bool point = false;    // F is zero-dimensional; the remaining fields are unset
  Rational mu_iomega;    // mu_{i omega}(F)
  Rational bound;        // -2k
  Rational mu_sigma;     // mu_{i omega}(F) - k
  Rational tie_lhs;      // w2(E) mu_sigma(F)
  Rational tie_rhs;      // v3(E)
};

ClosedFormSides closed_form_sides(const NumericalThreefold& X, const ChernCharacter& ch_f,
                                  const ChernCharacter& ch_e, const Rational& k);

/// Slope-inequality comparison: Precedes iff mu_{i omega}(F) < -2k, or
/// equality there and w2(E) mu_sigma(F) < v3(E). Point classes always
/// Succeed. F must be sheaf or point shaped and E pair shaped.
PhaseOrder compare_phases_closed(const NumericalThreefold& X, const ChernCharacter& ch_f,
                                 const ChernCharacter& ch_e, const Rational& k);

/// lim phi_{sigma_m} as m -> infinity: 1 for points, 1/2 for sheaf and
/// pair classes.
Rational phase_limit(const ChernCharacter& ch);

/// k0 = -mu_{i omega}(F)/2; F is destabilizing against pair classes only
/// for k >= k0.
Rational destabilizing_threshold(const NumericalThreefold& X, const ChernCharacter& ch_f);

}  // namespace limitstab
