// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "limitstab/comparator.hpp"
#include "limitstab/crossing.hpp"
#include "limitstab/model_io.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace limitstab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first few failures of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ < 5) notes_ << (notes_.tellp() > 0 ? "; " : "") << what;
  }
  Outcome done(const std::string& summary) const {
    if (failures_ == 0) return {true, summary + " (" + std::to_string(checks_) + " checks)"};
    return {false, std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed: " + notes_.str()};
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::ostringstream notes_;
};

using Rows = std::vector<std::tuple<Rational, Rational, Rational>>;

Rows rows_of(const ChamberTable& t) {
  Rows out;
  for (const auto& e : t.collapsed()) out.emplace_back(*e.chamber.lo, *e.chamber.hi, e.value);
  return out;
}

std::string show(const Rows& rows) {
  std::string s;
  for (const auto& [lo, hi, v] : rows) {
    s += "(" + format_rational(lo) + "," + format_rational(hi) + ")=" + format_rational(v) + " ";
  }
  return s;
}

const Rational kBig(1000000);

Outcome criterion1() {
  Check c;
  const NumericalThreefold X(conifold_pair(3, 2));
  CrossingEngine e(X);
  const auto t = e.chamber_table(CurveClass({1, 1}), 1, Rational(-1, 2), 0);
  const Rows want{{Rational(-1, 2), Rational(-1, 10), 1}, {Rational(-1, 10), 0, 0}};
  c.expect(rows_of(t) == want, "table " + show(rows_of(t)));
  c.expect(Rational(-1, 10) == -1 / (2 * (degree(X, CurveClass({1, 0})) + degree(X, CurveClass({0, 1})))),
           "wall formula");
  return c.done("L1 = 1 | 0 with the wall at -1/10");
}

Outcome criterion2() {
  Check c;
  const NumericalThreefold X(conifold_pair(3, 2));
  CrossingEngine e(X);
  const auto t = e.chamber_table(CurveClass({1, 1}), 2, Rational(-1, 2), 0);
  const Rows want{{Rational(-1, 2), Rational(-1, 4), -1}, {Rational(-1, 4), Rational(-1, 5), -2},
                  {Rational(-1, 5), 0, 0}};
  c.expect(rows_of(t) == want, "table " + show(rows_of(t)));
  c.expect(t.effective_walls() == std::vector<Rational>{Rational(-1, 4), Rational(-1, 5)}, "effective walls");
  bool found = false;
  for (const auto& r : t.reports) {
    if (r.k0 != Rational(-1, 4)) continue;
    found = true;
    c.expect(r.terms.size() == 1, "datum count at -1/4");
    if (r.terms.size() == 1) {
      const auto& d = r.terms[0].datum;
      c.expect(d.beta1 == CurveClass({0, 1}) && d.n1 == 1 && d.beta2 == CurveClass({1, 0}) && d.n2 == 1,
               "datum at -1/4");
      c.expect(r.terms[0].contribution == 1, "contribution at -1/4");
    }
  }
  c.expect(found, "report at -1/4");
  return c.done("L2 = -1 | -2 | 0, single datum ([C2],1 | [C1],1) contributing 1");
}

Outcome criterion3() {
  Check c;
  const NumericalThreefold X(conifold_double(1));
  CrossingEngine e(X);
  const auto t = e.chamber_table(CurveClass({2}), 3, -2, 0);
  const Rows want{{-2, -1, -2}, {-1, 0, 0}};
  c.expect(rows_of(t) == want, "table " + show(rows_of(t)));
  c.expect(t.effective_walls() == std::vector<Rational>{-1}, "effective walls");
  c.expect(e.enumerate_wall_data(CurveClass({2}), 3, Rational(-3, 2)).empty(), "data at -3/2");
  return c.done("L3 = -2 | 0, nothing admissible at -3/2");
}

Outcome criterion4() {
  Check c;
  const NumericalThreefold X(conifold_double(1));
  CrossingEngine e(X);
  const auto t = e.chamber_table(CurveClass({2}), 4, -2, 0);
  const Rows want{{-2, Rational(-3, 2), 4}, {Rational(-3, 2), -1, 1}, {-1, 0, 0}};
  c.expect(rows_of(t) == want, "table " + show(rows_of(t)));
  c.expect(t.effective_walls() == std::vector<Rational>{Rational(-3, 2), -1}, "effective walls");
  bool found = false;
  for (const auto& r : t.reports) {
    if (r.k0 != -1) continue;
    found = true;
    bool double_term = false, single_term = false;
    for (const auto& term : r.terms) {
      const auto& d = term.datum;
      if (d.beta1 == CurveClass({2}) && d.n1 == 4) {
        double_term = true;
        c.expect(term.n_value && *term.n_value == Rational(-1, 4), "N_{4,2[C]}");
        c.expect(term.contribution == 1, "(2[C],4) contribution");
      }
      if (d.beta1 == CurveClass({1}) && d.n1 == 2) {
        single_term = true;
        c.expect(term.l_at_wall && *term.l_at_wall == 0, "L_{2,[C]} at the wall");
        c.expect(term.contribution == 0, "([C],2) contribution");
      }
    }
    c.expect(double_term && single_term && r.terms.size() == 2, "data at -1");
    c.expect(r.total == 1, "total at -1");
  }
  c.expect(found, "report at -1");
  return c.done("L4 = 4 | 1 | 0, wall -1 sums 1 + 0");
}

Outcome criterion5() {
  Check c;
  const NumericalThreefold X(conifold_single(1));
  CrossingEngine e(X);
  const auto rep = e.pt_symmetry_check(CurveClass({1}), 4);
  c.expect(rep.rows.size() == 4, "row count");
  for (const auto& row : rep.rows) {
    const std::string n = "n=" + std::to_string(row.n);
    c.expect(row.p_n == Rational(row.n % 2 ? row.n : -row.n), n + " seed");
    c.expect(row.p_minus_n == 0, n + " P_{-n}");
    c.expect(row.relation_defect && *row.relation_defect == 0, n + " relation defect");
    // independent restatement of the relation with N_n = 1
    c.expect(row.p_n - row.p_minus_n == Rational(row.n % 2 ? row.n : -row.n), n + " oracle");
  }
  c.expect(rep.consistent(), "telescoping");
  return c.done("P_n - P_{-n} = (-1)^{n-1} n N_n, P_{-n} = 0 for n = 1..4");
}

// Fuzz model used by 6 and 8: degrees in {1..5}, k denominators <= 12.
NumericalThreefold fuzz_model(std::mt19937_64& rng) {
  ThreefoldData d = oracle::random_model(rng);
  for (auto& b : d.basis) b.degree = std::uniform_int_distribution<int>(1, 5)(rng);
  return NumericalThreefold(d);
}

ChernCharacter fuzz_sheaf(std::mt19937_64& rng, std::size_t rank) {
  std::uniform_int_distribution<int> coeff(0, 20);
  CurveClass g;
  do {
    std::vector<std::int64_t> v(rank);
    for (auto& x : v) x = coeff(rng) / (1 + coeff(rng) / 4);
    g = CurveClass(v);
  } while (g.is_zero());
  return sheaf_class(g, std::uniform_int_distribution<int>(-20, 20)(rng));
}

ChernCharacter fuzz_pair(std::mt19937_64& rng, std::size_t rank) {
  std::uniform_int_distribution<int> coeff(0, 20);
  std::vector<std::int64_t> v(rank);
  for (auto& x : v) x = coeff(rng) / (1 + coeff(rng) / 4);
  return ch_of_pair(CurveClass(v), std::uniform_int_distribution<int>(-20, 20)(rng));
}

Rational fuzz_k(std::mt19937_64& rng) {
  return Rational(std::uniform_int_distribution<int>(-240, 240)(rng), std::uniform_int_distribution<int>(1, 12)(rng));
}

Outcome criterion6() {
  Check c;
  std::mt19937_64 rng(6);
  long ties = 0, points = 0;
  for (int i = 0; i < 12000; ++i) {
    const NumericalThreefold X = fuzz_model(rng);
    const bool point = i % 10 == 0;
    const ChernCharacter f = point ? point_class(X.rank(), std::uniform_int_distribution<int>(1, 20)(rng))
                                   : fuzz_sheaf(rng, X.rank());
    const ChernCharacter e = fuzz_pair(rng, X.rank());
    Rational k = fuzz_k(rng);
    if (!point && i % 4 == 1) {
      k = destabilizing_threshold(X, f);
      ++ties;
    }
    points += point;
    const PhaseOrder w_order = compare_phases(X, f, e, k);
    const PhaseOrder closed = compare_phases_closed(X, f, e, k);
    const std::string id = "case " + std::to_string(i) + " F=" + format_chern(f) + " E=" + format_chern(e) +
                           " k=" + format_rational(k);
    c.expect(w_order == closed, id + " W=" + std::string(to_string(w_order)) + " closed=" + std::string(to_string(closed)));
    if (w_order != PhaseOrder::Equal) {
      const int s = oracle::det_sign_at(oracle::charge(X, f, k), oracle::charge(X, e, k), kBig);
      c.expect(s == (w_order == PhaseOrder::Precedes ? 1 : -1), id + " sign W(10^6)");
    }
  }
  return c.done("12000 cases (" + std::to_string(ties) + " slope ties, " + std::to_string(points) +
                " point classes), W-sign and closed form agree");
}

Outcome criterion7() {
  Check c;
  long points = 0, tables = 0;
  for (const auto& data : {conifold_single(1), conifold_pair(3, 2), conifold_double(1)}) {
    const NumericalThreefold X(data);
    CrossingEngine e(X);
    for (const auto& [key, seed] : data.p_seed) {
      if (key.n == 0 || !X.p_seed(-key.n, key.beta)) continue;
      const PtBounds b = pt_bounds(X, key.beta, key.n);
      const PtBounds bd = pt_bounds(X, key.beta, -key.n);
      Rational reach = 0;
      for (const Rational& q : {b.k_pt, b.k_dual, bd.k_pt, bd.k_dual}) reach = std::max(reach, Rational(abs(q)));
      // the rigid-curve seed window bounds how far the recursion can reach
      const Rational K(floor_of(reach) + 1);
      const ChamberTable t = e.chamber_table(key.beta, key.n, -K, K);
      const ChamberTable td = e.chamber_table(key.beta, -key.n, -K, K);
      ++tables;
      for (const auto& entry : t.entries) {
        for (const auto& k : entry.chamber.interior_points(3)) {
          ++points;
          c.expect(entry.value == td.value_at(-k), data.name + " n=" + std::to_string(key.n) + " beta=" +
                                                       to_string(key.beta) + " k=" + format_rational(k));
        }
      }
    }
  }
  return c.done(std::to_string(tables) + " tables, " + std::to_string(points) + " points, L_n(k) = L_{-n}(-k)");
}

Outcome criterion8() {
  Check c;
  std::mt19937_64 rng(8);
  for (int i = 0; i < 12000; ++i) {
    const NumericalThreefold X = fuzz_model(rng);
    const ChernCharacter f = fuzz_sheaf(rng, X.rank());
    const ChernCharacter e = fuzz_pair(rng, X.rank());
    const Rational threshold = -slope_iomega(X, f) / 2;
    // half the cases sit just below the threshold
    const Rational k = i % 2 ? threshold - Rational(1, std::uniform_int_distribution<int>(1, 1000)(rng)) : fuzz_k(rng);
    const PhaseOrder order = compare_phases(X, f, e, k);
    if (k < threshold) {
      c.expect(order == PhaseOrder::Precedes, "case " + std::to_string(i) + " F=" + format_chern(f) +
                                                  " E=" + format_chern(e) + " k=" + format_rational(k));
    }
  }
  return c.done("12000 cases, nothing below -mu(F)/2 fails to precede");
}

Outcome criterion9() {
  Check c;
  std::mt19937_64 rng(9);
  for (int i = 0; i < 2000; ++i) {
    const NumericalThreefold X(oracle::random_model(rng));
    const ChernCharacter ch = oracle::random_in_scope(rng, X.rank());
    const Rational k = oracle::small_rational(rng, 40, 12);
    const auto z = charge_polynomial(X, ch, k);
    const Rational re = z.re(kBig), im = z.im(kBig);
    // arg in (pi/4, 5pi/4) iff the point lies strictly left of the ray through (1, 1)
    c.expect(im > re, "case " + std::to_string(i) + " ch=" + format_chern(ch) + " k=" + format_rational(k));
    c.expect(!(re == 0 && im == 0), "case " + std::to_string(i) + " zero charge");
  }
  return c.done("2000 classes inside the phase window at m = 10^6");
}

Outcome criterion10() {
  Check c;
  std::mt19937_64 rng(10);
  for (int i = 0; i < 2000; ++i) {
    const NumericalThreefold X(oracle::random_model(rng));
    const Rational k = oracle::small_rational(rng, 12, 6);
    std::vector<ChernCharacter> parts;
    const int count = std::uniform_int_distribution<int>(1, 8)(rng);
    for (int j = 0; j < count; ++j) parts.push_back(oracle::random_sheaf(rng, X.rank()));
    const std::string id = "case " + std::to_string(i);

    const auto groups = hn_sort(X, parts, k);
    std::size_t total = 0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      total += groups[g].parts.size();
      if (g) c.expect(groups[g - 1].slope > groups[g].slope, id + " slopes not strictly decreasing");
      for (const auto& p : groups[g].parts) {
        c.expect(std::get<Rational>(slope(X, p, k)) == groups[g].slope, id + " part in the wrong group");
      }
    }
    c.expect(total == parts.size(), id + " parts lost");

    std::vector<ChernCharacter> flat;
    for (const auto& g : groups) flat.insert(flat.end(), g.parts.begin(), g.parts.end());
    const auto again = hn_sort(X, flat, k);
    bool same = again.size() == groups.size();
    for (std::size_t g = 0; same && g < groups.size(); ++g) {
      same = again[g].slope == groups[g].slope && again[g].parts == groups[g].parts;
    }
    c.expect(same, id + " not idempotent");

    // see-saw: replace two parts of one group by their sum
    for (const auto& g : groups) {
      if (g.parts.size() < 2) continue;
      std::vector<ChernCharacter> merged;
      for (const auto& h : groups) {
        if (&h == &g) {
          merged.push_back(h.parts[0] + h.parts[1]);
          merged.insert(merged.end(), h.parts.begin() + 2, h.parts.end());
        } else {
          merged.insert(merged.end(), h.parts.begin(), h.parts.end());
        }
      }
      const auto seesaw = hn_sort(X, merged, k);
      c.expect(seesaw.size() == groups.size(), id + " see-saw changed the group count");
      break;
    }
  }
  return c.done("2000 multisets: strict order, idempotence, see-saw");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"pair(3,2) L1 table", criterion1},
      {"pair(3,2) L2 table and crossing report", criterion2},
      {"double(1) L3 table", criterion3},
      {"double(1) L4 table and crossing report", criterion4},
      {"single(1) PT relation", criterion5},
      {"comparator oracle equivalence", criterion6},
      {"duality symmetry", criterion7},
      {"destabilizing threshold direction", criterion8},
      {"phase window", criterion9},
      {"hn_sort properties", criterion10},
  };
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " -- "
              << o.detail << std::endl;
  }
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed in " << ms << " ms"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
