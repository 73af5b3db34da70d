#include "symwidth/sixfold.hpp"

#include "symwidth/cremona.hpp"

namespace symwidth {

namespace {

constexpr std::size_t kTailStart = 5;

Refusal refuse(RefusalReason reason, std::string message, std::optional<HomologyClass> violator = std::nullopt) {
  return Refusal{reason, std::move(message), std::move(violator)};
}

std::vector<std::string> standard_hypotheses(std::size_t k, std::size_t l) {
  const std::string manifold = "CP2#" + std::to_string(k) + "(-CP2)";
  return {
      "an exotic smooth manifold X homeomorphic but not diffeomorphic to " + manifold +
          " exists and carries symplectic forms (assumed from the literature, not verified)",
      "the exceptional classes of X are exactly the last " + std::to_string(l) +
          " basis classes, coming from blowing up its minimal model",
      "the cohomology map phi + Id is induced by an orientation-preserving diffeomorphism X x S2 -> X' x S2",
      "sphere area lambda satisfies lambda >= sqrt([w']^2), so the volume-bound ball of X embeds in X x S2",
  };
}

}  // namespace

ProductTopology product_topology(std::size_t k) {
  ProductTopology t;
  t.k = k;
  t.signature = 1 - static_cast<int>(k);
  t.p1_coefficient = 3 * t.signature;
  const HomologyClass K = canonical_class(k);
  for (const auto& c : K.coeffs()) {
    t.w2.push_back(static_cast<int>(mpz_odd_p(c.get_num_mpz_t()) ? 1 : 0));
  }
  return t;
}

bool verify_isometry(const LatticeMap& phi, std::size_t k) {
  if (phi.k() != k) {
    throw DimensionMismatch("isometry must be " + std::to_string(k + 1) + "x" + std::to_string(k + 1));
  }
  return phi.is_isometry();
}

bool fixes_last_classes(const LatticeMap& phi, std::size_t count) {
  if (count > phi.k()) return false;
  for (std::size_t col = phi.dim() - count; col < phi.dim(); ++col) {
    for (std::size_t row = 0; row < phi.dim(); ++row) {
      if (phi(row, col) != (row == col ? 1 : 0)) return false;
    }
  }
  return true;
}

HomologyClass extend_and_transport(const LatticeMap& phi, const HomologyClass& x, std::size_t fixed_tail) {
  if (!verify_isometry(phi, x.k())) throw PreconditionError("transport map is not a lattice isometry");
  if (!fixes_last_classes(phi, fixed_tail)) {
    throw PreconditionError("transport map must fix the last " + std::to_string(fixed_tail) + " classes");
  }
  return phi.apply(x);
}

ProductClass extend_and_transport(const LatticeMap& phi, const PeriodVector& base, const Rational& sphere_area,
                                  std::size_t fixed_tail) {
  const HomologyClass dual = extend_and_transport(phi, base.poincare_dual(), fixed_tail);
  return ProductClass{PeriodVector::from_dual(dual), sphere_area};
}

ChernDifference chern_difference(const PeriodVector& w) {
  ChernDifference out;
  out.witness = area(w, canonical_class(w.k()));
  out.differ = sgn(out.witness) < 0;
  return out;
}

const char* to_string(RefusalReason reason) {
  switch (reason) {
    case RefusalReason::bad_isometry: return "bad-isometry";
    case RefusalReason::cone_violation: return "cone-violation";
    case RefusalReason::not_reduced: return "not-reduced";
    case RefusalReason::non_strict_margin: return "non-strict-margin";
    case RefusalReason::exotic_cone_violation: return "exotic-cone-violation";
    case RefusalReason::insufficient_sphere_area: return "insufficient-sphere-area";
    case RefusalReason::chern_inconclusive: return "chern-inconclusive";
  }
  return "unknown";
}

CertificateOutcome width_gap_certificate(std::size_t k, std::size_t l, const PeriodVector& period,
                                         const Rational& sphere_area, const std::optional<LatticeMap>& phi_in) {
  if (period.k() != k) {
    throw DimensionMismatch("period vector has k=" + std::to_string(period.k()) + ", expected k=" + std::to_string(k));
  }
  if (l < 1 || l > k) throw PreconditionError("certificate needs 1 <= l <= k");
  const LatticeMap phi = phi_in.value_or(LatticeMap::identity(k));
  if (!verify_isometry(phi, k)) return refuse(RefusalReason::bad_isometry, "phi does not preserve the pairing");
  if (!fixes_last_classes(phi, l)) {
    return refuse(RefusalReason::bad_isometry, "phi must fix the last " + std::to_string(l) + " exceptional classes");
  }

  if (auto verdict = liliu_membership(period); !verdict.is_member()) {
    std::string message = std::string("w' is not in the symplectic cone: ") + to_string(verdict.status);
    if (verdict.violator) message += " at " + to_string(*verdict.violator);
    return refuse(RefusalReason::cone_violation, std::move(message), verdict.violator);
  }
  if (!is_reduced(period) || !has_positive_entries(period)) {
    return refuse(RefusalReason::not_reduced, "w' must be reduced with all b_i > 0; run reduce first");
  }

  WidthGapCertificate cert;
  cert.k = k;
  cert.l = l;
  cert.input_period = period;
  cert.sphere_area = sphere_area;
  cert.phi = phi;
  cert.period = period;

  cert.upper_bound = uniruled_upper_bound(period);
  if (k >= kTailStart && (cert.upper_bound.deformation_required() || !cert.upper_bound.k_minus_negative)) {
    try {
      auto deformed = deform_tail(period, kTailStart);
      cert.period = std::move(deformed.vector);
      cert.tail_halvings = deformed.halvings;
    } catch (const PreconditionError& e) {
      return refuse(RefusalReason::non_strict_margin, e.what());
    }
    cert.upper_bound = uniruled_upper_bound(cert.period);
  }
  if (cert.upper_bound.deformation_required()) {
    return refuse(RefusalReason::non_strict_margin, "fiber class area is not below the volume bound");
  }

  cert.standard_cone = liliu_membership(cert.period);
  if (!cert.standard_cone.is_member()) {
    return refuse(RefusalReason::cone_violation, "deformed w' left the symplectic cone", cert.standard_cone.violator);
  }

  cert.standard_side = ProductClass{cert.period, sphere_area};
  cert.exotic_side = extend_and_transport(phi, cert.period, sphere_area, l);
  cert.exotic_cone = kpm_membership(cert.exotic_side.base, l);
  if (!cert.exotic_cone.is_member()) {
    std::string message = std::string("transported class is not in the K+/K- cone union: ") +
                          to_string(cert.exotic_cone.status);
    return refuse(RefusalReason::exotic_cone_violation, std::move(message), cert.exotic_cone.violator);
  }

  const Rational volume = square(cert.period);
  if (sgn(sphere_area) <= 0 || sphere_area * sphere_area < volume) {
    return refuse(RefusalReason::insufficient_sphere_area,
                  "insufficient sphere area: need lambda >= sqrt(" + to_string(volume) + ")");
  }

  const auto chern = chern_difference(cert.period);
  cert.chern_witness = chern.witness;
  cert.chern_differ = chern.differ;
  cert.transported_chern_witness =
      pair(cert.exotic_side.base.poincare_dual(), phi.apply(canonical_class(k)));
  if (!chern.differ) {
    return refuse(RefusalReason::chern_inconclusive, "[w'].K >= 0; Chern classes not distinguished");
  }

  cert.exotic_width_lower = Magnitude::sqrt_of(volume);
  cert.standard_width_upper = product_upper_bound(cert.upper_bound);
  cert.gap = MagnitudeDifference{cert.exotic_width_lower, Magnitude::of(cert.standard_width_upper)};
  cert.topology = product_topology(k);
  cert.hypotheses = standard_hypotheses(k, l);
  return cert;
}

}  // namespace symwidth
