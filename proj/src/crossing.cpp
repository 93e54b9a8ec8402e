#include "limitstab/crossing.hpp"

#include <algorithm>
#include <stdexcept>

namespace limitstab {

std::string_view to_string(WallSide side) {
  return side == WallSide::Left ? "left" : "right";
}

namespace {

constexpr int kMaxDepth = 256;

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) throw std::logic_error("to_int64: " + format_rational(q) + " is not an integer");
  const Integer& v = boost::multiprecision::numerator(q);
  if (v > Integer(std::int64_t{1} << 62) || v < -Integer(std::int64_t{1} << 62)) {
    throw std::overflow_error("ch3 value " + v.str() + " out of range");
  }
  return v.convert_to<std::int64_t>();
}

// (-1)^(n-1)
int alternating_sign(std::int64_t n) {
  return (n % 2 == 0) ? -1 : 1;
}

void check_beta(const NumericalThreefold& X, const CurveClass& beta, bool allow_zero) {
  X.check_rank(beta);
  if (!beta.is_effective()) throw std::invalid_argument("class " + to_string(beta) + " is not effective");
  if (!allow_zero && beta.is_zero()) throw std::invalid_argument("curve class must be nonzero");
}

}  // namespace

Rational ChamberTable::value_at(const Rational& k) const {
  for (const auto& e : entries) {
    if (e.chamber.contains(k)) return e.value;
  }
  throw std::out_of_range("k = " + format_rational(k) + " is a wall or lies outside [" + format_rational(k_lo) +
                          ", " + format_rational(k_hi) + "]");
}

Rational ChamberTable::limit_at(const Rational& k, WallSide side) const {
  for (const auto& e : entries) {
    if (e.chamber.contains(k)) return e.value;
    if (side == WallSide::Left && e.chamber.hi && *e.chamber.hi == k) return e.value;
    if (side == WallSide::Right && e.chamber.lo && *e.chamber.lo == k) return e.value;
  }
  throw std::out_of_range("no " + std::string(to_string(side)) + " limit at k = " + format_rational(k));
}

std::vector<ChamberValue> ChamberTable::collapsed() const {
  std::vector<ChamberValue> out;
  for (const auto& e : entries) {
    if (!out.empty() && out.back().value == e.value) {
      out.back().chamber.hi = e.chamber.hi;
    } else {
      out.push_back(e);
    }
  }
  return out;
}

std::vector<Rational> ChamberTable::effective_walls() const {
  std::vector<Rational> out;
  for (const auto& r : reports) {
    if (r.total != 0) out.push_back(r.k0);
  }
  return out;
}

bool PtSymmetryReport::consistent() const {
  for (const auto& row : rows) {
    if (row.telescoping_defect != 0) return false;
    if (row.seed_minus_n && *row.seed_minus_n != row.p_minus_n) return false;
  }
  return true;
}

std::vector<WallDatum> CrossingEngine::enumerate_wall_data(const CurveClass& beta, std::int64_t n,
                                                           const Rational& k0) const {
  check_beta(X_, beta, false);
  const Rational mu = -2 * k0;
  std::vector<std::pair<Rational, WallDatum>> found;
  for (const auto& [first, second] : decompositions(X_, beta)) {
    const Rational d1 = degree(X_, first);
    const Rational n1q = mu * d1;
    if (!is_integer(n1q)) continue;
    const std::int64_t n1 = to_int64(n1q);
    const std::int64_t n2 = n - n1;
    // Only O_X[1] survives among pair-type objects with no curve class.
    if (second.is_zero() && n2 != 0) continue;
    const Rational m2 = min_ch3(X_, second);
    WallDatum d{k0, first, n1, second, n2, Rational(n1) <= Rational(n) - m2, Rational(n1) >= Rational(n) + m2};
    if (!d.sub_admissible && !d.quotient_admissible) continue;
    found.emplace_back(d1, std::move(d));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    if (a.second.n1 != b.second.n1) return a.second.n1 < b.second.n1;
    return a.second.beta1 < b.second.beta1;
  });
  std::vector<WallDatum> out;
  out.reserve(found.size());
  for (auto& [d, datum] : found) out.push_back(std::move(datum));
  return out;
}

Rational CrossingEngine::l_at_wall(const CurveClass& beta2, std::int64_t n2, const Rational& k0, WallSide side) {
  return l_at_wall_at(beta2, n2, k0, side, 0);
}

WallReport CrossingEngine::cross_wall(const CurveClass& beta, std::int64_t n, const Rational& k0,
                                      const Rational& l_minus) {
  return cross_wall_at(beta, n, k0, l_minus, 0);
}

ChamberTable CrossingEngine::chamber_table(const CurveClass& beta, std::int64_t n, const Rational& k_lo,
                                           const Rational& k_hi) {
  ChamberTable table = build_table(beta, n, k_lo, k_hi, 0);
  remember(table);
  return table;
}

Rational CrossingEngine::value(const CurveClass& beta, std::int64_t n, const Rational& k) {
  check_beta(X_, beta, false);
  if (is_wall(X_, beta, k)) {
    throw std::invalid_argument("k = " + format_rational(k) + " is a wall of " + to_string(beta));
  }
  return covering_table(beta, n, k, 0)->value_at(k);
}

Rational CrossingEngine::l_at_wall_at(const CurveClass& beta2, std::int64_t n2, const Rational& k0, WallSide side,
                                      int depth) {
  check_beta(X_, beta2, true);
  if (beta2.is_zero()) return Rational(n2 == 0 ? 1 : 0);
  return covering_table(beta2, n2, k0, depth + 1)->limit_at(k0, side);
}

WallReport CrossingEngine::cross_wall_at(const CurveClass& beta, std::int64_t n, const Rational& k0,
                                         const Rational& l_minus, int depth) {
  if (depth > kMaxDepth) throw std::logic_error("wall-crossing recursion exceeded its depth bound");
  WallReport report;
  report.k0 = k0;
  report.l_minus = l_minus;
  report.total = 0;
  const Rational beta_degree = degree(X_, beta);

  for (auto& datum : enumerate_wall_data(beta, n, k0)) {
    if (!datum.beta2.is_zero() && !(degree(X_, datum.beta2) < beta_degree)) {
      throw std::logic_error("wall datum does not lower the curve degree");
    }
    CrossingTerm term;
    term.datum = datum;
    term.side = datum.sub_admissible ? WallSide::Right : WallSide::Left;
    term.n_value = X_.n_entry(datum.n1, datum.beta1);
    term.coefficient = 0;
    term.contribution = 0;
    if (datum.n1 == 0) {
      // the factor n1 kills the term whatever N is
    } else if (!term.n_value) {
      report.warnings.push_back("missing N" + std::to_string(datum.n1) + "," + to_string(datum.beta1) +
                                "; term counted as 0");
    } else {
      term.coefficient = Rational(alternating_sign(datum.n1)) * datum.n1 * *term.n_value;
    }
    if (term.coefficient != 0) {
      term.l_at_wall = l_at_wall_at(datum.beta2, datum.n2, k0, term.side, depth);
      term.contribution = term.coefficient * *term.l_at_wall;
      if (datum.sub_admissible && datum.quotient_admissible && !datum.beta2.is_zero() &&
          is_wall(X_, datum.beta2, k0)) {
        term.ambiguous = true;
        report.warnings.push_back("datum " + to_string(datum.beta1) + "," + std::to_string(datum.n1) +
                                  " is both sub- and quotient-admissible; used the right limit");
      }
    }
    report.total += term.contribution;
    report.terms.push_back(std::move(term));
  }
  report.l_plus = l_minus - report.total;
  return report;
}

ChamberTable CrossingEngine::build_table(const CurveClass& beta, std::int64_t n, const Rational& k_lo,
                                         const Rational& k_hi, int depth) {
  if (depth > kMaxDepth) throw std::logic_error("wall-crossing recursion exceeded its depth bound");
  check_beta(X_, beta, false);
  const auto seed = X_.p_seed(n, beta);
  if (!seed) {
    throw ModelError("p_seed has no entry for n=" + std::to_string(n) + ", beta=" + to_string(beta));
  }
  const PtBounds bounds = pt_bounds(X_, beta, n);
  if (!(k_lo < bounds.k_pt)) {
    throw std::invalid_argument("chamber table for n=" + std::to_string(n) + ", beta=" + to_string(beta) +
                                " must start below k_pt = " + format_rational(bounds.k_pt) + ", got k_lo = " +
                                format_rational(k_lo));
  }
  const WallSet ws = wall_set(X_, beta, k_lo, k_hi);

  ChamberTable table;
  table.beta = beta;
  table.n = n;
  table.k_lo = k_lo;
  table.k_hi = k_hi;
  Rational value = *seed;
  Rational prev = k_lo;
  for (const auto& w : ws.walls) {
    if (w <= k_lo || w >= k_hi) continue;
    table.entries.push_back(ChamberValue{Chamber{prev, w}, value});
    WallReport report = cross_wall_at(beta, n, w, value, depth);
    value = report.l_plus;
    table.reports.push_back(std::move(report));
    prev = w;
  }
  table.entries.push_back(ChamberValue{Chamber{prev, k_hi}, value});
  return table;
}

std::shared_ptr<const ChamberTable> CrossingEngine::covering_table(const CurveClass& beta, std::int64_t n,
                                                                   const Rational& k, int depth) {
  const ChargeKey key{n, beta};
  std::shared_ptr<const ChamberTable> cached;
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) cached = it->second;
  }
  if (cached && cached->k_lo < k && k < cached->k_hi) return cached;

  const Rational k_pt = pt_bounds(X_, beta, n).k_pt;
  Rational lo = Rational(floor_of(std::min(k_pt, k)) - 1);
  Rational hi = Rational(ceil_of(std::max(k_pt, k)) + 1);
  if (cached) {
    lo = std::min(lo, cached->k_lo);
    hi = std::max(hi, cached->k_hi);
  }
  auto table = std::make_shared<const ChamberTable>(build_table(beta, n, lo, hi, depth));
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto& slot = cache_[key];
    if (!slot || (table->k_lo <= slot->k_lo && slot->k_hi <= table->k_hi)) slot = table;
  }
  return table;
}

void CrossingEngine::remember(const ChamberTable& table) {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto& slot = cache_[ChargeKey{table.n, table.beta}];
  if (!slot || (table.k_lo <= slot->k_lo && slot->k_hi <= table.k_hi)) {
    slot = std::make_shared<const ChamberTable>(table);
  }
}

PtSymmetryReport CrossingEngine::pt_symmetry_check(const CurveClass& beta, std::int64_t n_max) {
  check_beta(X_, beta, false);
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  PtSymmetryReport report;
  report.beta = beta;
  if (auto p0 = X_.p_seed(0, beta)) report.laurent[0] = *p0;

  for (std::int64_t n = 1; n <= n_max; ++n) {
    const auto seed = X_.p_seed(n, beta);
    if (!seed) {
      report.skipped.push_back(n);
      continue;
    }
    PtSymmetryRow row;
    row.n = n;
    row.bounds = pt_bounds(X_, beta, n);
    row.p_n = *seed;
    const Rational lo = Rational(floor_of(row.bounds.k_pt) - 1);
    const Rational hi = Rational(ceil_of(std::max(row.bounds.k_dual, row.bounds.k_pt)) + 1);
    const ChamberTable table = chamber_table(beta, n, lo, hi);
    row.p_minus_n = table.entries.back().value;
    row.seed_minus_n = X_.p_seed(-n, beta);
    row.crossing_sum = 0;
    for (const auto& r : table.reports) row.crossing_sum += r.total;
    row.telescoping_defect = (row.p_n - row.p_minus_n) - row.crossing_sum;
    row.n_value = X_.n_entry(n, beta);
    if (row.n_value) {
      row.relation_defect = (row.p_n - row.p_minus_n) - Rational(alternating_sign(n)) * n * *row.n_value;
    }
    report.laurent[n] = row.p_n;
    report.laurent[-n] = row.p_minus_n;
    report.rows.push_back(std::move(row));
  }
  if (report.rows.empty()) {
    throw ModelError("p_seed has no entry for " + to_string(beta) + " with 1 <= n <= " + std::to_string(n_max));
  }
  return report;
}

std::vector<HnGroup> hn_sort(const NumericalThreefold& X, std::vector<ChernCharacter> parts, const Rational& k) {
  std::vector<std::pair<Rational, ChernCharacter>> keyed;
  keyed.reserve(parts.size());
  for (auto& p : parts) {
    if (shape_of(p) != ClassShape::Sheaf) {
      throw std::invalid_argument("hn_sort: " + format_chern(p) + " is not a sheaf class of positive degree");
    }
    Rational mu = std::get<Rational>(slope(X, p, k));
    keyed.emplace_back(std::move(mu), std::move(p));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    if (a.second.n != b.second.n) return a.second.n < b.second.n;
    return a.second.gamma < b.second.gamma;
  });
  std::vector<HnGroup> out;
  for (auto& [mu, p] : keyed) {
    if (out.empty() || out.back().slope != mu) out.push_back(HnGroup{mu, {}});
    out.back().parts.push_back(std::move(p));
  }
  return out;
}

}  // namespace limitstab
