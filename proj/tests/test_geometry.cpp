#include "limitstab/model_io.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace limitstab;

namespace {

std::set<CurveClass> as_set(const std::vector<CurveClass>& v) { return {v.begin(), v.end()}; }

// Random model of rank 1..3 with an m-table covering N(cap).
NumericalThreefold random_model_with_m(std::mt19937_64& rng, CurveClass& cap) {
  ThreefoldData d = oracle::random_model(rng);
  for (auto& b : d.basis) b.degree = oracle::positive_rational(rng, 4, 2);
  std::vector<std::int64_t> v(d.basis.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i == 1 ? 1 : 2;
  cap = CurveClass(v);
  const NumericalThreefold probe(d);
  for (const auto& g : oracle::effective_below(probe, cap)) {
    if (!g.is_zero()) d.m_table[g] = oracle::small_rational(rng, 5, 2);
  }
  return NumericalThreefold(d);
}

std::vector<CurveClass> dominated(const CurveClass& cap) {
  std::vector<CurveClass> out;
  std::vector<std::int64_t> v(cap.rank(), 0);
  while (true) {
    out.emplace_back(v);
    std::size_t i = 0;
    while (i < v.size() && v[i] == cap[i]) v[i++] = 0;
    if (i == v.size()) return out;
    ++v[i];
  }
}

}  // namespace

TEST_CASE("degree examples") {
  const NumericalThreefold pair(conifold_pair(3, 2));
  CHECK(degree(pair, CurveClass({1, 1})) == 5);
  CHECK(degree(pair, CurveClass({0, 0})) == 0);
  const NumericalThreefold dbl(conifold_double(1));
  CHECK(degree(dbl, CurveClass({2})) == 2);
  CHECK_THROWS_AS(degree(dbl, CurveClass({1, 1})), std::invalid_argument);
}

TEST_CASE("effective_below examples") {
  const NumericalThreefold single(conifold_single(1));
  CHECK(as_set(effective_below(single, CurveClass({1}))) == std::set<CurveClass>{CurveClass({0}), CurveClass({1})});
  const NumericalThreefold pair(conifold_pair(3, 2));
  CHECK(as_set(effective_below(pair, CurveClass({1, 1}))) ==
        std::set<CurveClass>{CurveClass({0, 0}), CurveClass({0, 1}), CurveClass({1, 0}), CurveClass({0, 2}),
                             CurveClass({1, 1})});
  const NumericalThreefold dbl(conifold_double(1));
  CHECK(as_set(effective_below(dbl, CurveClass({2}))) ==
        std::set<CurveClass>{CurveClass({0}), CurveClass({1}), CurveClass({2})});
  CHECK_THROWS(effective_below(dbl, CurveClass({-1})));
}

TEST_CASE("min_ch3 examples") {
  const NumericalThreefold single(conifold_single(1));
  CHECK(min_ch3(single, CurveClass({0})) == 0);
  CHECK(min_ch3(NumericalThreefold(conifold_double(1)), CurveClass({1})) == 1);
  CHECK(min_ch3(NumericalThreefold(conifold_pair(3, 2)), CurveClass({0, 1})) == 1);
}

TEST_CASE("min_ch3 with a missing m-table entry is a model error") {
  // d1 >= 2 d2 puts 2[C2] below [C1], and the preset has no m(2[C2]).
  const NumericalThreefold pair(conifold_pair(5, 2));
  CHECK_THROWS_AS(min_ch3(pair, CurveClass({1, 0})), ModelError);
}

TEST_CASE("decompositions examples") {
  using D = std::pair<CurveClass, CurveClass>;
  auto as_dset = [](const std::vector<D>& v) { return std::set<D>(v.begin(), v.end()); };
  CHECK(as_dset(decompositions(NumericalThreefold(conifold_single(1)), CurveClass({1}))) ==
        std::set<D>{{CurveClass({1}), CurveClass({0})}});
  CHECK(as_dset(decompositions(NumericalThreefold(conifold_double(1)), CurveClass({2}))) ==
        std::set<D>{{CurveClass({1}), CurveClass({1})}, {CurveClass({2}), CurveClass({0})}});
  CHECK(as_dset(decompositions(NumericalThreefold(conifold_pair(3, 2)), CurveClass({1, 1}))) ==
        std::set<D>{{CurveClass({1, 0}), CurveClass({0, 1})},
                    {CurveClass({0, 1}), CurveClass({1, 0})},
                    {CurveClass({1, 1}), CurveClass({0, 0})}});
}

TEST_CASE("model validation names the violated invariant") {
  ThreefoldData d = conifold_single(1);
  d.basis[0].degree = 0;
  CHECK_THROWS_WITH_AS(NumericalThreefold{d}, doctest::Contains("degree"), ModelError);
  d = conifold_single(1);
  d.omega_cubed = -1;
  CHECK_THROWS_WITH_AS(NumericalThreefold{d}, doctest::Contains("omega_cubed"), ModelError);
  d = conifold_single(1);
  d.m_table[CurveClass({0})] = 0;
  CHECK_THROWS_WITH_AS(NumericalThreefold{d}, doctest::Contains("m(0)"), ModelError);
  d = conifold_single(1);
  d.n_table[{1, CurveClass({1, 0})}] = 1;
  CHECK_THROWS_WITH_AS(NumericalThreefold{d}, doctest::Contains("rank"), ModelError);
  d = conifold_single(1);
  d.p_seed[{1, CurveClass({-1})}] = 1;
  CHECK_THROWS_WITH_AS(NumericalThreefold{d}, doctest::Contains("effective"), ModelError);
}

TEST_CASE("geometry agrees with brute force on random models") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 150; ++trial) {
    CurveClass cap;
    const NumericalThreefold X = random_model_with_m(rng, cap);
    const auto small = dominated(cap);
    for (const auto& beta : small) {
      CAPTURE(to_string(beta));
      const auto below = effective_below(X, beta);
      const auto expected = oracle::effective_below(X, beta);
      REQUIRE(as_set(below) == expected);
      CHECK(below.size() == expected.size());
      CHECK(std::is_sorted(below.begin(), below.end(), [&](const CurveClass& a, const CurveClass& b) {
        return std::make_pair(degree(X, a), a) < std::make_pair(degree(X, b), b);
      }));
      // closed downward inside itself
      for (const auto& g : below) {
        for (std::size_t i = 0; i < g.rank(); ++i) {
          if (g[i] == 0) continue;
          std::vector<std::int64_t> v = g.coeffs();
          --v[i];
          CHECK(expected.count(CurveClass(v)) == 1);
        }
      }
      CHECK(min_ch3(X, beta) == oracle::m_of(X, beta));
      for (const auto& [b1, b2] : decompositions(X, beta)) {
        CHECK(!b1.is_zero());
        CHECK(b1.is_effective());
        CHECK(b2.is_effective());
        CHECK(b1 + b2 == beta);
        CHECK(degree(X, b1) + degree(X, b2) == degree(X, beta));
      }
      std::size_t dominated = 0;
      for (const auto& g : expected) dominated += (!g.is_zero() && g.dominated_by(beta)) ? 1 : 0;
      CHECK(decompositions(X, beta).size() == dominated);
    }
    // linearity and N-inclusion monotonicity
    for (const auto& a : small) {
      for (const auto& b : small) {
        CHECK(degree(X, a + b) == degree(X, a) + degree(X, b));
        if (!a.is_zero() && !b.is_zero() && degree(X, a) <= degree(X, b)) {
          CHECK(min_ch3(X, a) >= min_ch3(X, b));
        }
      }
    }
  }
}
