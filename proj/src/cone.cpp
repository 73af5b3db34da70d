#include "symwidth/cone.hpp"

#include <algorithm>
#include <limits>

namespace symwidth {

const char* to_string(ConeStatus status) {
  switch (status) {
    case ConeStatus::member: return "member";
    case ConeStatus::not_positive_square: return "not-positive-square";
    case ConeStatus::wrong_orientation: return "wrong-orientation";
    case ConeStatus::violated: return "violated";
  }
  return "unknown";
}

std::optional<std::size_t> first_violator(const PeriodVector& w, std::span<const HomologyClass> classes) {
  const long n = static_cast<long>(classes.size());
  long first = std::numeric_limits<long>::max();
#pragma omp parallel for reduction(min : first) schedule(static)
  for (long i = 0; i < n; ++i) {
    if (i < first && sgn(area(w, classes[static_cast<std::size_t>(i)])) <= 0) first = i;
  }
  if (first == std::numeric_limits<long>::max()) return std::nullopt;
  return static_cast<std::size_t>(first);
}

std::optional<std::size_t> first_violator_serial(const PeriodVector& w, std::span<const HomologyClass> classes) {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (sgn(area(w, classes[i])) <= 0) return i;
  }
  return std::nullopt;
}

ConeVerdict liliu_membership(const PeriodVector& w) {
  if (sgn(square(w)) <= 0) return {ConeStatus::not_positive_square, std::nullopt, 0};
  if (sgn(w.a()) <= 0) return {ConeStatus::wrong_orientation, std::nullopt, 0};
  long bound = violator_degree_bound(w);
  if (w.k() <= 8) bound = std::max(bound, 6L);

  // Lowest degree first, so the reported violator is the first in set order.
  for (long d = 0; d <= bound; ++d) {
    std::vector<HomologyClass> slice;
    for (const auto& c : exceptional_classes_of_degree(w.k(), d)) slice.push_back(HomologyClass::from_integers(c));
    if (auto hit = first_violator(w, slice)) {
      return {ConeStatus::violated, std::move(slice[*hit]), bound};
    }
  }
  return {ConeStatus::member, std::nullopt, bound};
}

ConeVerdict kpm_membership(const PeriodVector& w, std::size_t l) {
  if (l > w.k()) throw PreconditionError("exotic model needs 0 <= l <= k");
  if (sgn(square(w)) <= 0) return {ConeStatus::not_positive_square, std::nullopt, 0};
  for (std::size_t i = w.k() - l + 1; i <= w.k(); ++i) {
    if (sgn(w.b(i)) <= 0) {
      return {ConeStatus::violated, HomologyClass::exceptional_generator(w.k(), i), 0};
    }
  }
  return {ConeStatus::member, std::nullopt, 0};
}

}  // namespace symwidth
