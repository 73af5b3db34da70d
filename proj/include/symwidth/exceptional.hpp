#pragma once

#include <cstddef>
#include <vector>

#include "symwidth/lattice.hpp"

namespace symwidth {

/// Integer coefficient vector (d; e_1..e_k) used by the search kernels.
using IntegralClass = std::vector<long>;

struct ExceptionalSet {
  std::size_t k = 0;
  long degree_bound = 0;
  /// Ordered by degree, then lexicographically descending in (e_1..e_k).
  std::vector<HomologyClass> classes;
  /// True when no exceptional class of degree above degree_bound matters.
  bool complete = false;
};

/// Where a degree bound came from; a bound from violator_degree_bound is
/// sufficient for the period vector it was computed for.
enum class BoundOrigin { caller, violator_cutoff };

/// E.E = -1 and K.E = -1 with integral coefficients.
bool is_exceptional(const HomologyClass& e);

/// All exceptional classes of degree d >= 0 in k blowups, in set order.
std::vector<IntegralClass> exceptional_classes_of_degree(std::size_t k, long degree);

/// Degree slices are searched in parallel and merged in degree order.
ExceptionalSet enumerate_exceptional(std::size_t k, long degree_bound, BoundOrigin origin = BoundOrigin::caller);
/// Single-threaded reference for enumerate_exceptional.
ExceptionalSet enumerate_exceptional_serial(std::size_t k, long degree_bound,
                                            BoundOrigin origin = BoundOrigin::caller);

/// floor(|b| / sqrt(a^2 - |b|^2)): every exceptional class of larger degree
/// has positive area. Requires square(w) > 0 and a > 0.
long violator_degree_bound(const PeriodVector& w);

}  // namespace symwidth
