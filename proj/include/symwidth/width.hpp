#pragma once

#include <optional>
#include <vector>

#include "symwidth/lattice.hpp"

namespace symwidth {

/// True when one of the criteria forcing a manifold to NOT be of SW-simple
/// type applies: rational or ruled; b1 = 0 and b2+ = 1; b1 = 2 with nonzero
/// cup square on H^1 (asserted by the caller).
bool simple_type_exempt(const ManifoldDescriptor& m);

struct ProjectedClass {
  HomologyClass cls;
  Rational c1;
  friend bool operator==(const ProjectedClass&, const ProjectedClass&) = default;
};

/// Exceptional classes of the (k+1)-fold blowup with the last coordinate
/// dropped, zero removed, deduplicated; c1 is taken in the k-fold lattice.
std::vector<ProjectedClass> projected_blowup_classes(std::size_t k, long degree_bound);

struct DPrimeResult {
  /// Empty means +infinity.
  std::optional<Rational> value;
  std::optional<ProjectedClass> attained_by;
  long checked_bound = 0;
};

/// inf of w(B) / (c1(B) - 1) over projected classes with c1(B) >= 2.
DPrimeResult d_prime(const PeriodVector& w, long degree_bound);

enum class WidthWitness { volume_bound, obstructing_class, formula_not_applicable };

const char* to_string(WidthWitness witness);

struct WidthResult {
  /// Empty exactly when the witness is formula_not_applicable.
  std::optional<Magnitude> value;
  WidthWitness witness = WidthWitness::formula_not_applicable;
  std::optional<ProjectedClass> obstructing_class;
  long checked_bound = 0;
};

/// One-ball packing width. Rational models take min(sqrt([w]^2), d'); exotic
/// rational models (and other non rational/ruled exempt manifolds) have d' =
/// infinity, so the width is the volume bound.
///
/// The period vector must lie in the relevant symplectic cone
/// (PreconditionError otherwise). For rational k >= 8 the infimum over
/// projected classes is truncated at degree_bound.
WidthResult gromov_width(const PeriodVector& w, const ManifoldDescriptor& m, long degree_bound);

struct UpperBoundResult {
  /// The fiber class H - E_1.
  HomologyClass uniruled_class;
  /// w(H - E_1) = a - b_1.
  Rational bound;
  /// [w]^2 - bound^2.
  Rational strict_margin;
  /// [w].K = -3a + sum b_i.
  Rational canonical_pairing;
  bool k_minus_negative = false;

  bool deformation_required() const { return sgn(strict_margin) <= 0; }
};

/// Areas of the fiber class bound the width from above. Requires k >= 1 and
/// a reduced vector with positive entries and positive square.
UpperBoundResult uniruled_upper_bound(const PeriodVector& w);

struct TailDeformation {
  PeriodVector vector;
  /// Number of times b_{from_index..k} were halved.
  unsigned halvings = 0;
};

/// Halves b_{from_index}, ..., b_k until the fiber margin is positive and the
/// canonical pairing is negative. Requires a reduced vector and from_index >= 5.
TailDeformation deform_tail(const PeriodVector& w, std::size_t from_index);

/// Bound for the width of the product with a sphere; the fiber class stays
/// uniruled under the inclusion H_2(X) -> H_2(X x S^2).
Rational product_upper_bound(const UpperBoundResult& u);

}  // namespace symwidth
