#include "limitstab/geometry.hpp"

#include <algorithm>
#include <functional>

namespace limitstab {

bool CurveClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t a) { return a == 0; });
}

bool CurveClass::is_effective() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t a) { return a >= 0; });
}

bool CurveClass::dominated_by(const CurveClass& other) const {
  if (other.rank() != rank()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] > other.coeffs_[i]) return false;
  }
  return true;
}

CurveClass& CurveClass::operator+=(const CurveClass& rhs) {
  if (rhs.rank() != rank()) throw std::invalid_argument("curve class rank mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CurveClass& CurveClass::operator-=(const CurveClass& rhs) {
  if (rhs.rank() != rank()) throw std::invalid_argument("curve class rank mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CurveClass operator*(std::int64_t s, CurveClass a) {
  for (auto& c : a.coeffs_) c *= s;
  return a;
}

std::string to_string(const CurveClass& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.rank(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  return out + ")";
}

namespace {

void check_table_class(const NumericalThreefold& X, const CurveClass& beta, const std::string& table) {
  if (beta.rank() != X.rank()) {
    throw ModelError(table + ": class " + to_string(beta) + " has rank " + std::to_string(beta.rank()) +
                     ", model rank is " + std::to_string(X.rank()));
  }
  if (!beta.is_effective()) {
    throw ModelError(table + ": class " + to_string(beta) + " is not effective");
  }
}

}  // namespace

NumericalThreefold::NumericalThreefold(ThreefoldData data) : data_(std::move(data)) {
  if (data_.basis.empty()) throw ModelError("basis: at least one curve is required");
  for (const auto& b : data_.basis) {
    if (b.degree <= 0) {
      throw ModelError("basis: degree of " + b.name + " must be positive, got " + format_rational(b.degree));
    }
  }
  if (data_.omega_cubed <= 0) {
    throw ModelError("omega_cubed must be positive, got " + format_rational(data_.omega_cubed));
  }
  for (const auto& [beta, value] : data_.m_table) {
    check_table_class(*this, beta, "m_table");
    if (beta.is_zero()) throw ModelError("m_table: m(0) = 0 is fixed and must not be stored");
  }
  for (const auto& [key, value] : data_.n_table) {
    check_table_class(*this, key.beta, "n_table");
    if (key.beta.is_zero()) throw ModelError("n_table: class must be nonzero");
  }
  for (const auto& [key, value] : data_.p_seed) {
    check_table_class(*this, key.beta, "p_seed");
    if (key.beta.is_zero()) throw ModelError("p_seed: class must be nonzero");
  }
}

std::optional<Rational> NumericalThreefold::m_entry(const CurveClass& beta) const {
  auto it = data_.m_table.find(beta);
  if (it == data_.m_table.end()) return std::nullopt;
  return it->second;
}

std::optional<Rational> NumericalThreefold::n_entry(std::int64_t n, const CurveClass& beta) const {
  auto it = data_.n_table.find(ChargeKey{n, beta});
  if (it == data_.n_table.end()) return std::nullopt;
  return it->second;
}

std::optional<Rational> NumericalThreefold::p_seed(std::int64_t n, const CurveClass& beta) const {
  auto it = data_.p_seed.find(ChargeKey{n, beta});
  if (it == data_.p_seed.end()) return std::nullopt;
  return it->second;
}

void NumericalThreefold::check_rank(const CurveClass& beta) const {
  if (beta.rank() != rank()) {
    throw std::invalid_argument("class " + to_string(beta) + " has rank " + std::to_string(beta.rank()) +
                                ", model rank is " + std::to_string(rank()));
  }
}

Rational degree(const NumericalThreefold& X, const CurveClass& gamma) {
  X.check_rank(gamma);
  Rational d(0);
  for (std::size_t i = 0; i < gamma.rank(); ++i) d += gamma[i] * X.data().basis[i].degree;
  return d;
}

Rational degree(const NumericalThreefold& X, std::span<const Rational> gamma) {
  if (gamma.size() != X.rank()) {
    throw std::invalid_argument("ch2 has " + std::to_string(gamma.size()) + " coordinates, model rank is " +
                                std::to_string(X.rank()));
  }
  Rational d(0);
  for (std::size_t i = 0; i < gamma.size(); ++i) d += gamma[i] * X.data().basis[i].degree;
  return d;
}

std::vector<CurveClass> effective_below(const NumericalThreefold& X, const CurveClass& beta) {
  X.check_rank(beta);
  if (!beta.is_effective()) throw std::invalid_argument("class " + to_string(beta) + " is not effective");

  const Rational bound = degree(X, beta);
  const auto& basis = X.data().basis;
  std::vector<std::pair<Rational, CurveClass>> found;
  std::vector<std::int64_t> coeffs(X.rank(), 0);

  // Bounded walk over the simplicial cone: coordinate i ranges while the
  // accumulated degree stays within the bound.
  std::function<void(std::size_t, const Rational&)> walk = [&](std::size_t i, const Rational& used) {
    if (i == coeffs.size()) {
      found.emplace_back(used, CurveClass(coeffs));
      return;
    }
    Rational d = used;
    for (std::int64_t a = 0; d <= bound; ++a, d += basis[i].degree) {
      coeffs[i] = a;
      walk(i + 1, d);
    }
    coeffs[i] = 0;
  };
  walk(0, Rational(0));

  std::sort(found.begin(), found.end());
  std::vector<CurveClass> out;
  out.reserve(found.size());
  for (auto& [d, c] : found) out.push_back(std::move(c));
  return out;
}

Rational min_ch3(const NumericalThreefold& X, const CurveClass& beta) {
  X.check_rank(beta);
  if (!beta.is_effective()) throw std::invalid_argument("class " + to_string(beta) + " is not effective");
  if (beta.is_zero()) return Rational(0);

  std::optional<Rational> best;
  for (const auto& gamma : effective_below(X, beta)) {
    if (gamma.is_zero()) continue;
    auto m = X.m_entry(gamma);
    if (!m) {
      throw ModelError("m_table has no entry for " + to_string(gamma) + " (needed for m" + to_string(beta) + ")");
    }
    if (!best || *m < *best) best = *m;
  }
  return *best;
}

std::vector<std::pair<CurveClass, CurveClass>> decompositions(const NumericalThreefold& X,
                                                              const CurveClass& beta) {
  X.check_rank(beta);
  if (!beta.is_effective()) throw std::invalid_argument("class " + to_string(beta) + " is not effective");

  std::vector<std::pair<CurveClass, CurveClass>> out;
  for (const auto& first : effective_below(X, beta)) {
    if (first.is_zero() || !first.dominated_by(beta)) continue;
    out.emplace_back(first, beta - first);
  }
  return out;
}

}  // namespace limitstab
