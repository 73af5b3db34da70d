// Independent re-validation of width-gap certificates. The arithmetic here is
// written out directly on coefficient arrays and does not call into the width
// or sixfold pipeline code.

#include <algorithm>

#include "symwidth/sixfold.hpp"

namespace symwidth {

namespace {

using Coeffs = std::vector<Rational>;

Coeffs coeffs_of(const PeriodVector& w) { return Coeffs(w.areas().begin(), w.areas().end()); }

Rational volume_of(const Coeffs& w) {
  Rational q = w[0] * w[0];
  for (std::size_t i = 1; i < w.size(); ++i) q -= w[i] * w[i];
  return q;
}

Rational canonical_of(const Coeffs& w) {
  Rational q = -3 * w[0];
  for (std::size_t i = 1; i < w.size(); ++i) q += w[i];
  return q;
}

Coeffs multiply(const LatticeMap& phi, const Coeffs& x) {
  const std::size_t n = x.size();
  Coeffs out(n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out[r] += Rational(static_cast<long>(phi(r, c))) * x[c];
  return out;
}

bool preserves_form(const LatticeMap& phi) {
  const std::size_t n = phi.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      long long total = 0;
      for (std::size_t r = 0; r < n; ++r) total += (r == 0 ? 1 : -1) * phi(r, i) * phi(r, j);
      const long long expected = i != j ? 0 : (i == 0 ? 1 : -1);
      if (total != expected) return false;
    }
  }
  return true;
}

bool is_reduced_positive(const Coeffs& w) {
  const std::size_t k = w.size() - 1;
  for (std::size_t i = 1; i <= k; ++i) {
    if (sgn(w[i]) <= 0) return false;
    if (i > 1 && w[i] > w[i - 1]) return false;
  }
  Rational leading = 0;
  for (std::size_t i = 1; i <= std::min<std::size_t>(3, k); ++i) leading += w[i];
  return w[0] >= leading;
}

}  // namespace

std::vector<std::string> validate_certificate(const WidthGapCertificate& cert, bool rescan_cone) {
  std::vector<std::string> problems;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  };

  const std::size_t k = cert.k;
  if (cert.input_period.k() != k || cert.period.k() != k || cert.phi.k() != k ||
      cert.standard_side.base.k() != k || cert.exotic_side.base.k() != k) {
    problems.push_back("dimension mismatch between certificate fields");
    return problems;
  }
  expect(cert.l >= 1 && cert.l <= k, "l out of range");
  if (!problems.empty()) return problems;

  // Transport map.
  expect(preserves_form(cert.phi), "phi does not preserve the intersection form");
  for (std::size_t col = k + 1 - cert.l; col <= k; ++col)
    for (std::size_t row = 0; row <= k; ++row)
      expect(cert.phi(row, col) == (row == col ? 1 : 0), "phi moves one of the last l classes");

  // Period: input with b_5.. halved tail_halvings times.
  const Coeffs input = coeffs_of(cert.input_period);
  const Coeffs w = coeffs_of(cert.period);
  Rational factor = 1;
  for (unsigned h = 0; h < cert.tail_halvings; ++h) factor /= 2;
  for (std::size_t i = 0; i <= k; ++i) {
    expect(w[i] == (i >= 5 ? input[i] * factor : input[i]), "period is not the tail deformation of the input");
  }
  expect(is_reduced_positive(input), "input period is not reduced with positive entries");
  expect(is_reduced_positive(w), "period is not reduced with positive entries");

  // Widths.
  const Rational volume = volume_of(w);
  const Rational fiber = w[0] - w[1];
  expect(sgn(volume) > 0, "period has non-positive square");
  expect(sgn(fiber) > 0, "fiber class area is not positive");
  expect(!cert.exotic_width_lower.is_infinite() && cert.exotic_width_lower.radicand() == volume,
         "exotic lower bound is not sqrt([w']^2)");
  expect(cert.standard_width_upper == fiber, "standard upper bound is not w'(H - E1)");
  expect(cert.upper_bound.bound == fiber, "upper bound record disagrees with w'(H - E1)");
  expect(cert.upper_bound.strict_margin == volume - fiber * fiber, "strict margin disagrees");
  Coeffs fiber_class(k + 1, 0);
  fiber_class[0] = 1;
  fiber_class[1] = -1;
  expect(cert.upper_bound.uniruled_class == HomologyClass(fiber_class), "uniruled class is not H - E1");
  expect(!cert.gap.minuend.is_infinite() && cert.gap.minuend.radicand() == volume, "gap minuend disagrees");
  expect(!cert.gap.subtrahend.is_infinite() && cert.gap.subtrahend.radicand() == fiber * fiber,
         "gap subtrahend disagrees");
  expect(volume > fiber * fiber, "gap is not positive");

  // Sphere factor.
  expect(sgn(cert.sphere_area) > 0 && cert.sphere_area * cert.sphere_area >= volume,
         "sphere area is below the exotic lower bound");

  // Cohomologous pair.
  expect(coeffs_of(cert.standard_side.base) == w && cert.standard_side.sphere_area == cert.sphere_area,
         "standard side is not (w', lambda)");
  Coeffs dual = w;
  for (std::size_t i = 1; i <= k; ++i) dual[i] = -dual[i];
  Coeffs moved = multiply(cert.phi, dual);
  Coeffs transported = moved;
  for (std::size_t i = 1; i <= k; ++i) transported[i] = -transported[i];
  expect(coeffs_of(cert.exotic_side.base) == transported && cert.exotic_side.sphere_area == cert.sphere_area,
         "exotic side is not the transport of the standard side");

  // Chern witness.
  const Rational witness = canonical_of(w);
  expect(cert.chern_witness == witness, "Chern witness is not [w'].K");
  expect(cert.chern_differ == (sgn(witness) < 0), "chern_differ disagrees with the witness sign");
  expect(cert.chern_differ, "certificate does not distinguish Chern classes");
  Coeffs canonical(k + 1, 1);
  canonical[0] = -3;
  const Coeffs moved_canonical = multiply(cert.phi, canonical);
  Rational transported_witness = moved[0] * moved_canonical[0];
  for (std::size_t i = 1; i <= k; ++i) transported_witness -= moved[i] * moved_canonical[i];
  expect(cert.transported_chern_witness == transported_witness && transported_witness == witness,
         "transported Chern witness disagrees");

  // Cone verdicts.
  expect(cert.exotic_cone.status == ConeStatus::member, "exotic cone verdict is not member");
  bool exotic_ok = sgn(volume_of(transported)) > 0;
  for (std::size_t i = k + 1 - cert.l; i <= k; ++i) exotic_ok = exotic_ok && sgn(transported[i]) > 0;
  expect(exotic_ok, "transported class fails positivity on the exotic exceptional classes");

  expect(cert.standard_cone.status == ConeStatus::member, "standard cone verdict is not member");
  const Rational norm_b = w[0] * w[0] - volume;
  const Rational ratio = norm_b / volume;
  const Integer cutoff = sqrt(Integer(ratio.get_num() / ratio.get_den()));
  expect(Integer(cert.standard_cone.checked_bound) >= cutoff, "standard cone scan stopped below the cutoff degree");
  if (k <= 8) expect(cert.standard_cone.checked_bound >= 6, "standard cone scan stopped below degree 6");
  if (rescan_cone) expect(liliu_membership(cert.period).is_member(), "rescan finds a cone violation");

  // Product topology.
  expect(cert.topology.k == k, "topology k disagrees");
  expect(cert.topology.signature == 1 - static_cast<int>(k), "signature is not 1 - k");
  expect(cert.topology.p1_coefficient == 3 * cert.topology.signature, "p1 is not 3 * signature");
  expect(cert.topology.w2 == std::vector<int>(k + 1, 1), "w2 is not the reduction of K");

  expect(!cert.hypotheses.empty(), "hypotheses are missing");
  return problems;
}

}  // namespace symwidth
