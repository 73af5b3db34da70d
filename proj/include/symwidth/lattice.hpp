#pragma once

// Conventions used throughout the library (single source of truth):
//
//   * Lattice basis of H_2(CP^2 # k(-CP^2)) is (H, E_1, ..., E_k) with
//     H.H = 1, E_i.E_i = -1 and all other pairings 0.
//   * A HomologyClass (d; e_1..e_k) is d*H + sum e_i*E_i.
//   * The canonical class is K = (-3; 1, ..., 1), so c_1(B) = -K.B = 3d + sum e_i.
//   * A PeriodVector (a; b_1..b_k) records a = w(H), b_i = w(E_i). Its
//     Poincare dual is (a; -b_1..-b_k) and w(d; e) = a*d + sum b_i*e_i.
//   * Coordinates are 0-based in code: coefficient 0 is H, coefficient i is E_i.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "symwidth/rational.hpp"

namespace symwidth {

class HomologyClass {
 public:
  HomologyClass() = default;
  /// coeffs = (d; e_1..e_k); must be non-empty.
  explicit HomologyClass(std::vector<Rational> coeffs);
  static HomologyClass from_integers(std::span<const long> coeffs);
  static HomologyClass zero(std::size_t k);
  static HomologyClass line(std::size_t k);
  /// E_i for 1 <= i <= k.
  static HomologyClass exceptional_generator(std::size_t k, std::size_t i);

  std::size_t k() const { return coeffs_.size() - 1; }
  const Rational& degree() const { return coeffs_.front(); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_integral() const;

  HomologyClass operator+(const HomologyClass& other) const;
  HomologyClass operator-(const HomologyClass& other) const;
  HomologyClass operator-() const;
  HomologyClass scaled(const Rational& t) const;

  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;

 private:
  std::vector<Rational> coeffs_ = {Rational(0)};
};

class PeriodVector {
 public:
  PeriodVector() = default;
  /// areas = (a; b_1..b_k); must be non-empty.
  explicit PeriodVector(std::vector<Rational> areas);
  static PeriodVector from_integers(std::span<const long> areas);

  std::size_t k() const { return areas_.size() - 1; }
  const Rational& a() const { return areas_.front(); }
  /// b_i for 1 <= i <= k.
  const Rational& b(std::size_t i) const { return areas_[i]; }
  const Rational& operator[](std::size_t i) const { return areas_[i]; }
  std::span<const Rational> areas() const { return areas_; }

  HomologyClass poincare_dual() const;
  static PeriodVector from_dual(const HomologyClass& dual);

  PeriodVector scaled(const Rational& t) const;
  PeriodVector with_area(std::size_t i, Rational value) const;

  friend bool operator==(const PeriodVector&, const PeriodVector&) = default;

 private:
  std::vector<Rational> areas_ = {Rational(0)};
};

/// Which four-manifold a computation is about.
struct RationalModel {
  std::size_t k = 0;
};

/// Homeomorphic but not diffeomorphic to CP^2 # k(-CP^2); the exotic manifold
/// is a blowup of its minimal model at l points, and its exceptional classes
/// are exactly the last l basis classes.
struct ExoticRationalModel {
  std::size_t k = 0;
  std::size_t l = 0;
};

struct GeneralModel {
  int b1 = 0;
  int b2_plus = 0;
  int signature = 0;
  /// User assertion that b_1 = 2 and the cup square on H^1 is nonzero.
  bool nontrivial_h1_square = false;
  bool rational_or_ruled = false;
};

using ManifoldDescriptor = std::variant<RationalModel, ExoticRationalModel, GeneralModel>;

/// Throws PreconditionError when an exotic model has l > k.
void validate(const ManifoldDescriptor& m);

/// Intersection pairing d*d' - sum e_i*e_i'.
Rational pair(const HomologyClass& x, const HomologyClass& y);
Rational self_intersection(const HomologyClass& x);
HomologyClass canonical_class(std::size_t k);
/// c_1(B) = -K.B.
Rational c1_eval(const HomologyClass& b);
/// w(B) = a*d + sum b_i*e_i.
Rational area(const PeriodVector& w, const HomologyClass& b);
/// [w]^2 = a^2 - sum b_i^2.
Rational square(const PeriodVector& w);

/// Square integer matrix acting on coefficient vectors of HomologyClass.
/// Column j is the image of the j-th basis class.
class LatticeMap {
 public:
  LatticeMap() = default;
  /// Row-major entries; entries.size() must be (k+1)^2.
  LatticeMap(std::size_t k, std::vector<std::int64_t> entries);
  static LatticeMap identity(std::size_t k);

  std::size_t k() const { return dim_ - 1; }
  std::size_t dim() const { return dim_; }
  std::int64_t operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  std::span<const std::int64_t> entries() const { return entries_; }

  HomologyClass apply(const HomologyClass& x) const;
  /// Transports a period vector through its Poincare dual.
  PeriodVector apply(const PeriodVector& w) const;
  LatticeMap compose(const LatticeMap& inner) const;

  Integer determinant() const;
  bool is_isometry() const;

  friend bool operator==(const LatticeMap&, const LatticeMap&) = default;

 private:
  std::size_t dim_ = 1;
  std::vector<std::int64_t> entries_ = {1};
};

std::string to_string(const HomologyClass& x);
std::string to_string(const PeriodVector& w);

}  // namespace symwidth
