#include "symwidth/exceptional.hpp"

#include <algorithm>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace symwidth {

namespace {

long isqrt(long n) {
  if (n <= 0) return 0;
  long r = static_cast<long>(Integer(sqrt(Integer(n))).get_si());
  return r;
}

long ceil_div(long num, long den) {
  // den > 0
  return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

// Non-increasing sequences of `remaining` integers, each <= ceiling, with the
// given sum and sum of squares.
void sorted_solutions(long remaining, long sum, long squares, long ceiling, IntegralClass& prefix,
                      std::vector<IntegralClass>& out) {
  if (remaining == 0) {
    if (sum == 0 && squares == 0) out.push_back(prefix);
    return;
  }
  if (squares < 0 || std::abs(sum) > squares || ((sum - squares) & 1) != 0) return;
  if (sum * sum > remaining * squares) return;
  const long root = isqrt(squares);
  const long hi = std::min(ceiling, root);
  const long lo = std::max(-root, ceil_div(sum, remaining));
  for (long v = hi; v >= lo; --v) {
    prefix.push_back(v);
    sorted_solutions(remaining - 1, sum - v, squares - v * v, v, prefix, out);
    prefix.pop_back();
  }
}

std::vector<HomologyClass> to_classes(std::vector<IntegralClass> slice) {
  std::vector<HomologyClass> out;
  out.reserve(slice.size());
  for (const auto& c : slice) out.push_back(HomologyClass::from_integers(c));
  return out;
}

bool is_complete(std::size_t k, long degree_bound, BoundOrigin origin) {
  return origin == BoundOrigin::violator_cutoff || (k <= 8 && degree_bound >= 6);
}

}  // namespace

bool is_exceptional(const HomologyClass& e) {
  if (!e.is_integral()) return false;
  return self_intersection(e) == -1 && pair(canonical_class(e.k()), e) == -1;
}

std::vector<IntegralClass> exceptional_classes_of_degree(std::size_t k, long degree) {
  if (degree < 0) return {};
  // 3d + sum e = 1 and d^2 - sum e^2 = -1.
  std::vector<IntegralClass> shapes;
  IntegralClass prefix;
  prefix.reserve(k);
  sorted_solutions(static_cast<long>(k), 1 - 3 * degree, degree * degree + 1, degree + 1, prefix, shapes);

  std::vector<IntegralClass> out;
  for (auto& shape : shapes) {
    // shape is descending, so prev_permutation walks all distinct
    // arrangements in descending lexicographic order.
    do {
      IntegralClass c;
      c.reserve(k + 1);
      c.push_back(degree);
      c.insert(c.end(), shape.begin(), shape.end());
      out.push_back(std::move(c));
    } while (std::prev_permutation(shape.begin(), shape.end()));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

ExceptionalSet enumerate_exceptional(std::size_t k, long degree_bound, BoundOrigin origin) {
  ExceptionalSet set{k, degree_bound, {}, is_complete(k, degree_bound, origin)};
  if (degree_bound < 0) return set;
  std::vector<std::vector<IntegralClass>> slices(static_cast<std::size_t>(degree_bound) + 1);
  // Higher degrees are far more expensive; dynamic scheduling keeps threads busy.
#pragma omp parallel for schedule(dynamic, 1)
  for (long d = degree_bound; d >= 0; --d) {
    slices[static_cast<std::size_t>(d)] = exceptional_classes_of_degree(k, d);
  }
  for (auto& slice : slices) {
    auto classes = to_classes(std::move(slice));
    set.classes.insert(set.classes.end(), std::make_move_iterator(classes.begin()),
                       std::make_move_iterator(classes.end()));
  }
  return set;
}

ExceptionalSet enumerate_exceptional_serial(std::size_t k, long degree_bound, BoundOrigin origin) {
  ExceptionalSet set{k, degree_bound, {}, is_complete(k, degree_bound, origin)};
  for (long d = 0; d <= degree_bound; ++d) {
    for (const auto& c : exceptional_classes_of_degree(k, d)) set.classes.push_back(HomologyClass::from_integers(c));
  }
  return set;
}

long violator_degree_bound(const PeriodVector& w) {
  const Rational sq = square(w);
  if (sgn(sq) <= 0) throw PreconditionError("violator degree bound needs a class of positive square");
  if (sgn(w.a()) <= 0) throw PreconditionError("violator degree bound needs a positive line area");
  const Rational norm_b = w.a() * w.a() - sq;
  const Integer bound = floor_sqrt(norm_b / sq);
  if (!bound.fits_slong_p()) throw PreconditionError("violator degree bound does not fit a machine integer");
  return bound.get_si();
}

}  // namespace symwidth
