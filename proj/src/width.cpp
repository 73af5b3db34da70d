#include "symwidth/width.hpp"

#include <set>
#include <stdexcept>

#include "symwidth/cone.hpp"
#include "symwidth/cremona.hpp"
#include "symwidth/exceptional.hpp"

namespace symwidth {

namespace {

Rational canonical_pairing(const PeriodVector& w) { return area(w, canonical_class(w.k())); }

Rational fiber_margin(const PeriodVector& w) {
  const Rational fiber = w.a() - w.b(1);
  return square(w) - fiber * fiber;
}

void require_k(const PeriodVector& w, std::size_t k) {
  if (w.k() != k) {
    throw DimensionMismatch("period vector has k=" + std::to_string(w.k()) + ", model has k=" + std::to_string(k));
  }
}

}  // namespace

bool simple_type_exempt(const ManifoldDescriptor& m) {
  struct Visitor {
    bool operator()(const RationalModel&) const { return true; }
    bool operator()(const ExoticRationalModel&) const { return true; }
    bool operator()(const GeneralModel& g) const {
      return g.rational_or_ruled || (g.b1 == 0 && g.b2_plus == 1) || (g.b1 == 2 && g.nontrivial_h1_square);
    }
  };
  return std::visit(Visitor{}, m);
}

const char* to_string(WidthWitness witness) {
  switch (witness) {
    case WidthWitness::volume_bound: return "volume-bound";
    case WidthWitness::obstructing_class: return "obstructing-class";
    case WidthWitness::formula_not_applicable: return "formula-not-applicable";
  }
  return "unknown";
}

std::vector<ProjectedClass> projected_blowup_classes(std::size_t k, long degree_bound) {
  const auto blowup = enumerate_exceptional(k + 1, degree_bound);
  std::set<IntegralClass, std::greater<>> seen;
  std::vector<ProjectedClass> out;
  for (const auto& e : blowup.classes) {
    IntegralClass projected;
    for (std::size_t i = 0; i <= k; ++i) projected.push_back(e[i].get_num().get_si());
    HomologyClass b = HomologyClass::from_integers(projected);
    if (b.is_zero() || !seen.insert(projected).second) continue;
    Rational c1 = c1_eval(b);
    out.push_back({std::move(b), std::move(c1)});
  }
  return out;
}

DPrimeResult d_prime(const PeriodVector& w, long degree_bound) {
  DPrimeResult result;
  result.checked_bound = degree_bound;
  for (auto& candidate : projected_blowup_classes(w.k(), degree_bound)) {
    if (candidate.c1 < 2) continue;  // contributes +infinity
    Rational ratio = area(w, candidate.cls) / (candidate.c1 - 1);
    if (!result.value || ratio < *result.value) {
      result.value = std::move(ratio);
      result.attained_by = std::move(candidate);
    }
  }
  return result;
}

WidthResult gromov_width(const PeriodVector& w, const ManifoldDescriptor& m, long degree_bound) {
  validate(m);
  WidthResult result;
  if (!simple_type_exempt(m)) return result;

  if (const auto* model = std::get_if<RationalModel>(&m)) {
    require_k(w, model->k);
    const auto verdict = liliu_membership(w);
    if (!verdict.is_member()) {
      throw PreconditionError(std::string("period vector is not in the symplectic cone: ") + to_string(verdict.status));
    }
    result.checked_bound = degree_bound;
    const Magnitude volume = Magnitude::sqrt_of(square(w));
    auto obstruction = d_prime(w, degree_bound);
    if (obstruction.value && Magnitude::of(*obstruction.value) < volume) {
      result.value = Magnitude::of(*obstruction.value);
      result.witness = WidthWitness::obstructing_class;
      result.obstructing_class = std::move(obstruction.attained_by);
    } else {
      result.value = volume;
      result.witness = WidthWitness::volume_bound;
    }
    return result;
  }

  if (const auto* model = std::get_if<ExoticRationalModel>(&m)) {
    require_k(w, model->k);
    const auto verdict = kpm_membership(w, model->l);
    if (!verdict.is_member()) {
      throw PreconditionError(std::string("period vector is not in the K+/K- cone union: ") +
                              to_string(verdict.status));
    }
  } else {
    const auto& general = std::get<GeneralModel>(m);
    // d' is only computable on the rational lattice
    if (general.rational_or_ruled) return result;
    if (sgn(square(w)) <= 0) throw PreconditionError("width needs a class of positive square");
  }
  result.value = Magnitude::sqrt_of(square(w));
  result.witness = WidthWitness::volume_bound;
  return result;
}

UpperBoundResult uniruled_upper_bound(const PeriodVector& w) {
  if (w.k() == 0) throw PreconditionError("the fiber class needs k >= 1");
  if (!is_reduced(w)) throw PreconditionError("uniruled upper bound needs a reduced period vector");
  if (!has_positive_entries(w)) throw PreconditionError("uniruled upper bound needs all b_i > 0");
  if (sgn(square(w)) <= 0) throw PreconditionError("uniruled upper bound needs a class of positive square");

  UpperBoundResult u;
  u.uniruled_class = HomologyClass::line(w.k()) - HomologyClass::exceptional_generator(w.k(), 1);
  u.bound = area(w, u.uniruled_class);
  u.strict_margin = square(w) - u.bound * u.bound;
  u.canonical_pairing = canonical_pairing(w);
  u.k_minus_negative = sgn(u.canonical_pairing) < 0;
  if (w.k() <= 4 && u.deformation_required()) {
    throw std::logic_error("fiber margin must be positive for reduced vectors with k <= 4");
  }
  return u;
}

TailDeformation deform_tail(const PeriodVector& w, std::size_t from_index) {
  if (from_index < 5) throw PreconditionError("tail deformation starts at b_5 or later");
  if (!is_reduced(w)) throw PreconditionError("tail deformation needs a reduced period vector");
  if (w.k() < from_index) return {w, 0};

  PeriodVector limit = w;
  for (std::size_t i = from_index; i <= w.k(); ++i) limit = limit.with_area(i, 0);
  if (sgn(fiber_margin(limit)) <= 0 || sgn(canonical_pairing(limit)) >= 0) {
    throw PreconditionError("tail deformation cannot succeed even as the tail vanishes");
  }

  TailDeformation out{w, 0};
  const Rational half(1, 2);
  while (sgn(fiber_margin(out.vector)) <= 0 || sgn(canonical_pairing(out.vector)) >= 0) {
    for (std::size_t i = from_index; i <= w.k(); ++i) out.vector = out.vector.with_area(i, out.vector.b(i) * half);
    ++out.halvings;
  }
  return out;
}

Rational product_upper_bound(const UpperBoundResult& u) { return u.bound; }

}  // namespace symwidth
