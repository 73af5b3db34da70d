#include "symwidth/lattice.hpp"

#include <algorithm>

namespace symwidth {

namespace {

void require_same_k(std::size_t lhs, std::size_t rhs, const char* what) {
  if (lhs != rhs) {
    throw DimensionMismatch(std::string(what) + ": blowup counts " + std::to_string(lhs) + " and " +
                            std::to_string(rhs) + " differ");
  }
}

std::string join_coefficients(std::span<const Rational> values) {
  std::string out = "(" + to_string(values.front());
  for (std::size_t i = 1; i < values.size(); ++i) {
    out += (i == 1 ? ";" : ",");
    out += to_string(values[i]);
  }
  return out + ")";
}

}  // namespace

HomologyClass::HomologyClass(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw PreconditionError("a homology class needs at least the H coefficient");
}

HomologyClass HomologyClass::from_integers(std::span<const long> coeffs) {
  return HomologyClass(std::vector<Rational>(coeffs.begin(), coeffs.end()));
}

HomologyClass HomologyClass::zero(std::size_t k) { return HomologyClass(std::vector<Rational>(k + 1, 0)); }

HomologyClass HomologyClass::line(std::size_t k) {
  std::vector<Rational> c(k + 1, 0);
  c[0] = 1;
  return HomologyClass(std::move(c));
}

HomologyClass HomologyClass::exceptional_generator(std::size_t k, std::size_t i) {
  if (i == 0 || i > k) throw PreconditionError("exceptional generator index out of range");
  std::vector<Rational> c(k + 1, 0);
  c[i] = 1;
  return HomologyClass(std::move(c));
}

bool HomologyClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool HomologyClass::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

HomologyClass HomologyClass::operator+(const HomologyClass& other) const {
  require_same_k(k(), other.k(), "sum");
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] + other.coeffs_[i];
  return HomologyClass(std::move(c));
}

HomologyClass HomologyClass::operator-(const HomologyClass& other) const { return *this + (-other); }

HomologyClass HomologyClass::operator-() const { return scaled(-1); }

HomologyClass HomologyClass::scaled(const Rational& t) const {
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = t * coeffs_[i];
  return HomologyClass(std::move(c));
}

PeriodVector::PeriodVector(std::vector<Rational> areas) : areas_(std::move(areas)) {
  if (areas_.empty()) throw PreconditionError("a period vector needs at least the line area");
}

PeriodVector PeriodVector::from_integers(std::span<const long> areas) {
  return PeriodVector(std::vector<Rational>(areas.begin(), areas.end()));
}

HomologyClass PeriodVector::poincare_dual() const {
  std::vector<Rational> c(areas_);
  for (std::size_t i = 1; i < c.size(); ++i) c[i] = -c[i];
  return HomologyClass(std::move(c));
}

PeriodVector PeriodVector::from_dual(const HomologyClass& dual) {
  std::vector<Rational> v(dual.coeffs().begin(), dual.coeffs().end());
  for (std::size_t i = 1; i < v.size(); ++i) v[i] = -v[i];
  return PeriodVector(std::move(v));
}

PeriodVector PeriodVector::scaled(const Rational& t) const {
  std::vector<Rational> v(areas_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = t * areas_[i];
  return PeriodVector(std::move(v));
}

PeriodVector PeriodVector::with_area(std::size_t i, Rational value) const {
  std::vector<Rational> v(areas_);
  v.at(i) = std::move(value);
  return PeriodVector(std::move(v));
}

void validate(const ManifoldDescriptor& m) {
  if (const auto* exotic = std::get_if<ExoticRationalModel>(&m)) {
    if (exotic->l > exotic->k) throw PreconditionError("exotic model needs 0 <= l <= k");
  }
}

Rational pair(const HomologyClass& x, const HomologyClass& y) {
  require_same_k(x.k(), y.k(), "pair");
  Rational total = x[0] * y[0];
  for (std::size_t i = 1; i <= x.k(); ++i) total -= x[i] * y[i];
  return total;
}

Rational self_intersection(const HomologyClass& x) { return pair(x, x); }

HomologyClass canonical_class(std::size_t k) {
  std::vector<Rational> c(k + 1, 1);
  c[0] = -3;
  return HomologyClass(std::move(c));
}

Rational c1_eval(const HomologyClass& b) { return -pair(canonical_class(b.k()), b); }

Rational area(const PeriodVector& w, const HomologyClass& b) {
  require_same_k(w.k(), b.k(), "area");
  Rational total = 0;
  for (std::size_t i = 0; i <= w.k(); ++i) total += w[i] * b[i];
  return total;
}

Rational square(const PeriodVector& w) {
  Rational total = w.a() * w.a();
  for (std::size_t i = 1; i <= w.k(); ++i) total -= w.b(i) * w.b(i);
  return total;
}

LatticeMap::LatticeMap(std::size_t k, std::vector<std::int64_t> entries) : dim_(k + 1), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw DimensionMismatch("lattice map for k=" + std::to_string(k) + " needs " + std::to_string(dim_ * dim_) +
                            " entries, got " + std::to_string(entries_.size()));
  }
}

LatticeMap LatticeMap::identity(std::size_t k) {
  std::vector<std::int64_t> e((k + 1) * (k + 1), 0);
  for (std::size_t i = 0; i <= k; ++i) e[i * (k + 1) + i] = 1;
  return LatticeMap(k, std::move(e));
}

HomologyClass LatticeMap::apply(const HomologyClass& x) const {
  require_same_k(k(), x.k(), "lattice map");
  std::vector<Rational> out(dim_, 0);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      const auto entry = (*this)(r, c);
      if (entry != 0) out[r] += Rational(static_cast<long>(entry)) * x[c];
    }
  }
  return HomologyClass(std::move(out));
}

PeriodVector LatticeMap::apply(const PeriodVector& w) const {
  return PeriodVector::from_dual(apply(w.poincare_dual()));
}

LatticeMap LatticeMap::compose(const LatticeMap& inner) const {
  require_same_k(k(), inner.k(), "compose");
  std::vector<std::int64_t> e(dim_ * dim_, 0);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t m = 0; m < dim_; ++m)
      for (std::size_t c = 0; c < dim_; ++c) e[r * dim_ + c] += (*this)(r, m) * inner(m, c);
  return LatticeMap(k(), std::move(e));
}

Integer LatticeMap::determinant() const {
  // Bareiss fraction-free elimination.
  const std::size_t n = dim_;
  std::vector<Integer> m(entries_.begin(), entries_.end());
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return m[r * n + c]; };
  Integer previous = 1;
  int sign = 1;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (at(p, p) == 0) {
      std::size_t swap = p + 1;
      while (swap < n && at(swap, p) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(p, c), at(swap, c));
      sign = -sign;
    }
    for (std::size_t r = p + 1; r < n; ++r) {
      for (std::size_t c = p + 1; c < n; ++c) {
        at(r, c) = (at(r, c) * at(p, p) - at(r, p) * at(p, c)) / previous;
      }
    }
    previous = at(p, p);
  }
  return sign * at(n - 1, n - 1);
}

bool LatticeMap::is_isometry() const {
  // phi^T G phi = G with G = diag(1, -1, ..., -1).
  auto g = [](std::size_t i) -> std::int64_t { return i == 0 ? 1 : -1; };
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      Integer total = 0;
      for (std::size_t r = 0; r < dim_; ++r) {
        total += Integer(static_cast<long>(g(r) * (*this)(r, i))) * Integer(static_cast<long>((*this)(r, j)));
      }
      if (total != (i == j ? g(i) : 0)) return false;
    }
  }
  const Integer det = determinant();
  return det == 1 || det == -1;
}

std::string to_string(const HomologyClass& x) { return join_coefficients(x.coeffs()); }
std::string to_string(const PeriodVector& w) { return join_coefficients(w.areas()); }

}  // namespace symwidth
