#include "limitstab/comparator.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace limitstab;

namespace {

NumericalThreefold model(const Rational& omega3, const Rational& d) {
  ThreefoldData data;
  data.name = "cmp";
  data.basis = {{"C", d}};
  data.omega_cubed = omega3;
  return NumericalThreefold(data);
}

const CurveClass C({1});
const CurveClass C2({2});

}  // namespace

TEST_CASE("point class against I_x[1] succeeds") {
  const NumericalThreefold X = model(6, 1);
  const ChernCharacter ix1{-1, 0, {0}, -1};
  for (const Rational k : {Rational(-3), Rational(0), Rational(5, 2)}) {
    CHECK(compare_phases(X, point_class(1, 1), ix1, k) == PhaseOrder::Succeeds);
    CHECK(compare_phases_closed(X, point_class(1, 1), ix1, k) == PhaseOrder::Succeeds);
  }
}

TEST_CASE("identical classes compare equal") {
  const NumericalThreefold X = model(6, 1);
  for (const auto& ch : {point_class(1, 2), sheaf_class(C, 3), ch_of_pair(C2, -1), ch_of_pair(CurveClass({0}), 0)}) {
    CHECK(compare_phases(X, ch, ch, Rational(-1, 3)) == PhaseOrder::Equal);
  }
}

TEST_CASE("comparator worked examples") {
  const NumericalThreefold X = model(6, 1);
  CHECK(compare_phases(X, sheaf_class(C, 1), ch_of_pair(C, 1), -1) == PhaseOrder::Precedes);
  const auto w = phase_determinant(X, sheaf_class(C, 1), ch_of_pair(C, 1), -1);
  CHECK(w(Rational(1000000)) > 0);

  CHECK(compare_phases_closed(X, sheaf_class(C, 1), ch_of_pair(C2, 3), -1) == PhaseOrder::Precedes);

  // tie on the slope test: mu = 2 = -2k, decided by w2(E) mu_sigma(F) vs v3(E)
  const auto sides = closed_form_sides(X, sheaf_class(C, 2), ch_of_pair(C2, 3), -1);
  CHECK(sides.mu_iomega == sides.bound);
  const auto inv = twisted_invariants(X, ch_of_pair(C2, 3), -1);
  CHECK(sides.tie_lhs == inv.w2 * 3);
  CHECK(sides.tie_rhs == inv.v3);
  CHECK(compare_phases_closed(X, sheaf_class(C, 2), ch_of_pair(C2, 3), -1) ==
        compare_phases(X, sheaf_class(C, 2), ch_of_pair(C2, 3), -1));
}

TEST_CASE("phase limits") {
  CHECK(phase_limit(point_class(1, 5)) == 1);
  CHECK(phase_limit(sheaf_class(C, -4)) == Rational(1, 2));
  CHECK(phase_limit(ch_of_pair(C2, 7)) == Rational(1, 2));
  CHECK_THROWS_AS(phase_limit(point_class(1, 0)), std::invalid_argument);
}

TEST_CASE("destabilizing thresholds") {
  const NumericalThreefold X = model(1, 1);
  CHECK(destabilizing_threshold(X, sheaf_class(C, 1)) == Rational(-1, 2));
  CHECK(destabilizing_threshold(X, sheaf_class(C, 2)) == -1);
  CHECK(destabilizing_threshold(X, sheaf_class(C2, 4)) == -1);
  CHECK_THROWS_AS(destabilizing_threshold(X, point_class(1, 1)), std::invalid_argument);
}

TEST_CASE("precondition violations") {
  const NumericalThreefold X = model(1, 1);
  CHECK_THROWS_AS(compare_phases(X, point_class(1, 0), ch_of_pair(C, 1), 0), std::invalid_argument);
  CHECK_THROWS_AS(compare_phases(X, ChernCharacter{1, 0, {0}, 0}, ch_of_pair(C, 1), 0), std::invalid_argument);
  CHECK_THROWS_AS(compare_phases_closed(X, ch_of_pair(C, 1), ch_of_pair(C, 1), 0), std::invalid_argument);
  CHECK_THROWS_AS(compare_phases_closed(X, sheaf_class(C, 1), sheaf_class(C, 1), 0), std::invalid_argument);
}

TEST_CASE("comparator properties on random inputs") {
  std::mt19937_64 rng(4242);
  const Rational big(1000000);
  for (int trial = 0; trial < 3000; ++trial) {
    const NumericalThreefold X(oracle::random_model(rng));
    const ChernCharacter f = std::uniform_int_distribution<int>(0, 4)(rng) == 0 ? oracle::random_point(rng, X.rank())
                                                                                  : oracle::random_sheaf(rng, X.rank());
    const ChernCharacter e = oracle::random_pair(rng, X.rank());
    Rational k = oracle::small_rational(rng, 24, 12);
    if (shape_of(f) == ClassShape::Sheaf && trial % 3 == 0) k = destabilizing_threshold(X, f);
    CAPTURE(format_chern(f));
    CAPTURE(format_chern(e));
    CAPTURE(format_rational(k));

    const PhaseOrder order = compare_phases(X, f, e, k);
    CHECK(order == compare_phases_closed(X, f, e, k));
    CHECK(compare_phases(X, e, f, k) == reversed(order));

    const Polynomial w = phase_determinant(X, f, e, k);
    if (order != PhaseOrder::Equal) {
      CHECK(sign_of(w(big)) == (order == PhaseOrder::Precedes ? 1 : -1));
      CHECK(oracle::det_sign_at(oracle::charge(X, f, k), oracle::charge(X, e, k), big) == sign_of(w(big)));
    } else {
      CHECK(w.is_zero());
    }

    if (shape_of(f) == ClassShape::Sheaf) {
      if (order != PhaseOrder::Precedes) CHECK(k >= destabilizing_threshold(X, f));
      // the dual charge flips W, so the order reverses
      const Polynomial wd = phase_determinant(X, dual(f), dual(e), -k);
      CHECK(wd == -w);
      CHECK(compare_phases(X, dual(f), dual(e), -k) == reversed(order));
    }
  }
}
