#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symwidth/cone.hpp"
#include "symwidth/lattice.hpp"
#include "symwidth/width.hpp"

namespace symwidth {

/// Class in H^2(X x S^2) = H^2(X) + Z[PD(X)]; sphere_area is the coefficient
/// on PD(X), i.e. the area of the sphere factor.
struct ProductClass {
  PeriodVector base;
  Rational sphere_area;
  friend bool operator==(const ProductClass&, const ProductClass&) = default;
};

/// Characteristic data of (CP^2 # k(-CP^2)) x S^2.
struct ProductTopology {
  std::size_t k = 0;
  int signature = 0;
  /// p_1 = p1_coefficient * PD(S^2).
  int p1_coefficient = 0;
  /// w_2 as the mod 2 reduction of the canonical class coefficients.
  std::vector<int> w2;
  friend bool operator==(const ProductTopology&, const ProductTopology&) = default;
};

ProductTopology product_topology(std::size_t k);

/// phi^T G phi = G and det = +-1. Throws DimensionMismatch unless phi is (k+1)x(k+1).
bool verify_isometry(const LatticeMap& phi, std::size_t k);
/// Columns of the last `count` basis classes are the corresponding unit vectors.
bool fixes_last_classes(const LatticeMap& phi, std::size_t count);

/// phi + Id: transports the H^2 part and carries the sphere area unchanged.
/// When fixed_tail > 0, phi must also fix the last fixed_tail classes.
ProductClass extend_and_transport(const LatticeMap& phi, const PeriodVector& base, const Rational& sphere_area,
                                  std::size_t fixed_tail = 0);
HomologyClass extend_and_transport(const LatticeMap& phi, const HomologyClass& x, std::size_t fixed_tail = 0);

struct ChernDifference {
  /// True certifies distinct first Chern classes; false is inconclusive.
  bool differ = false;
  /// [w].K = -3a + sum b_i.
  Rational witness;
};

ChernDifference chern_difference(const PeriodVector& w);

enum class RefusalReason {
  bad_isometry,
  cone_violation,
  not_reduced,
  non_strict_margin,
  exotic_cone_violation,
  insufficient_sphere_area,
  chern_inconclusive,
};

const char* to_string(RefusalReason reason);

struct Refusal {
  RefusalReason reason;
  std::string message;
  std::optional<HomologyClass> violator;
};

struct WidthGapCertificate {
  // Inputs.
  std::size_t k = 0;
  std::size_t l = 0;
  PeriodVector input_period;
  Rational sphere_area;
  LatticeMap phi;

  /// The standard-side period after any tail deformation.
  PeriodVector period;
  unsigned tail_halvings = 0;
  UpperBoundResult upper_bound;

  /// (w', lambda) on X' x S^2.
  ProductClass standard_side;
  /// Its pullback (phi~ w', lambda) on X x S^2, the class of w_X + w_S2.
  ProductClass exotic_side;

  Magnitude exotic_width_lower;
  Rational standard_width_upper;
  MagnitudeDifference gap;

  bool chern_differ = false;
  Rational chern_witness;
  /// phi~[w'] . phi~(K); equals chern_witness for an isometry.
  Rational transported_chern_witness;

  ConeVerdict standard_cone;
  ConeVerdict exotic_cone;
  ProductTopology topology;
  std::vector<std::string> hypotheses;
};

using CertificateOutcome = std::variant<WidthGapCertificate, Refusal>;

/// Builds the cohomologous pair on X x S^2 and X' x S^2 with different
/// widths and Chern classes, or the first failed check. phi defaults to
/// the identity. Throws PreconditionError unless 1 <= l <= k and
/// DimensionMismatch on inconsistent sizes.
CertificateOutcome width_gap_certificate(std::size_t k, std::size_t l, const PeriodVector& period,
                                         const Rational& sphere_area,
                                         const std::optional<LatticeMap>& phi = std::nullopt);

/// Recomputes every field of a certificate from its inputs with separate
/// arithmetic and returns the discrepancies (empty when valid). With
/// rescan_cone, the rational-side cone verdict is recomputed too.
std::vector<std::string> validate_certificate(const WidthGapCertificate& cert, bool rescan_cone = true);

}  // namespace symwidth
