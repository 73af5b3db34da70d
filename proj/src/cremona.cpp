#include "symwidth/cremona.hpp"

#include <algorithm>
#include <numeric>

namespace symwidth {

namespace {

// Inverse of a single step, acting on homology classes.
HomologyClass pull_back(const ReductionStep& step, const HomologyClass& x) {
  if (std::holds_alternative<CremonaStep>(step)) {
    return lattice_map(step, x.k()).apply(x);  // reflections are involutions
  }
  const auto& source = std::get<SortStep>(step).source;
  std::vector<Rational> c(x.coeffs().begin(), x.coeffs().end());
  for (std::size_t i = 1; i <= x.k(); ++i) c[source[i - 1]] = x[i];
  return HomologyClass(std::move(c));
}

HomologyClass pull_back(const ReductionTrace& trace, HomologyClass x) {
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) x = pull_back(*it, x);
  return x;
}

std::optional<SortStep> sorting_step(const PeriodVector& v) {
  std::vector<std::size_t> source(v.k());
  std::iota(source.begin(), source.end(), std::size_t{1});
  std::stable_sort(source.begin(), source.end(),
                   [&](std::size_t i, std::size_t j) { return v.b(i) > v.b(j); });
  if (std::is_sorted(source.begin(), source.end())) return std::nullopt;
  return SortStep{std::move(source)};
}

}  // namespace

bool is_sorted_descending(const PeriodVector& v) {
  for (std::size_t i = 2; i <= v.k(); ++i) {
    if (v.b(i) > v.b(i - 1)) return false;
  }
  return true;
}

bool is_reduced(const PeriodVector& v) {
  if (!is_sorted_descending(v)) return false;
  if (v.k() > 0 && sgn(v.b(v.k())) < 0) return false;
  Rational leading = 0;
  for (std::size_t i = 1; i <= std::min<std::size_t>(3, v.k()); ++i) leading += v.b(i);
  return v.a() >= leading;
}

bool has_positive_entries(const PeriodVector& v) {
  for (std::size_t i = 1; i <= v.k(); ++i) {
    if (sgn(v.b(i)) <= 0) return false;
  }
  return true;
}

PeriodVector cremona_step(const PeriodVector& v) {
  if (v.k() < 3) throw PreconditionError("a Cremona move needs k >= 3");
  if (!is_sorted_descending(v)) throw PreconditionError("a Cremona move needs sorted areas");
  const Rational defect = v.a() - v.b(1) - v.b(2) - v.b(3);
  if (sgn(defect) >= 0) throw PreconditionError("vector already satisfies a >= b1+b2+b3");
  std::vector<Rational> out(v.areas().begin(), v.areas().end());
  out[0] = v.a() + defect;
  for (std::size_t i = 1; i <= 3; ++i) out[i] = v.b(i) + defect;
  return PeriodVector(std::move(out));
}

PeriodVector apply_step(const ReductionStep& step, const PeriodVector& v) {
  if (std::holds_alternative<CremonaStep>(step)) return cremona_step(v);
  const auto& source = std::get<SortStep>(step).source;
  if (source.size() != v.k()) throw DimensionMismatch("sort permutation length differs from k");
  std::vector<Rational> out(v.areas().begin(), v.areas().end());
  for (std::size_t i = 1; i <= v.k(); ++i) out[i] = v.b(source[i - 1]);
  return PeriodVector(std::move(out));
}

PeriodVector replay(const ReductionTrace& trace) {
  PeriodVector v = trace.input;
  for (const auto& step : trace.steps) v = apply_step(step, v);
  return v;
}

ReductionOutcome reduce(const PeriodVector& v) {
  if (sgn(square(v)) <= 0) throw PreconditionError("reduction needs a class of positive square");
  if (sgn(v.a()) <= 0) throw PreconditionError("reduction needs a positive line area");

  // The common denominator is invariant under these integral moves and a
  // drops by at least 1/denominator per move, so the loop terminates.
  ReductionOutcome outcome;
  outcome.trace.input = v;
  PeriodVector current = v;
  const std::size_t k = v.k();
  for (;;) {
    if (auto sort = sorting_step(current)) {
      current = apply_step(*sort, current);
      outcome.trace.steps.emplace_back(std::move(*sort));
    }
    if (k > 0 && sgn(current.b(k)) < 0) {
      outcome.status = ReductionStatus::negative_entry;
      outcome.obstruction = HomologyClass::exceptional_generator(k, k);
      break;
    }
    if (is_reduced(current)) {
      outcome.status = ReductionStatus::reduced;
      break;
    }
    if (k < 3) {
      // Only k = 2 can land here: a < b1 + b2, so H - E1 - E2 has negative area.
      outcome.status = ReductionStatus::negative_entry;
      outcome.obstruction = HomologyClass::line(k) - HomologyClass::exceptional_generator(k, 1) -
                            HomologyClass::exceptional_generator(k, 2);
      break;
    }
    current = cremona_step(current);
    outcome.trace.steps.emplace_back(CremonaStep{});
  }
  outcome.trace.output = current;
  outcome.vector = current;
  if (outcome.obstruction) outcome.obstruction = pull_back(outcome.trace, *outcome.obstruction);
  return outcome;
}

LatticeMap lattice_map(const ReductionStep& step, std::size_t k) {
  const std::size_t n = k + 1;
  std::vector<std::int64_t> e(n * n, 0);
  if (std::holds_alternative<CremonaStep>(step)) {
    if (k < 3) throw PreconditionError("a Cremona move needs k >= 3");
    // x -> x + (x.C) C with C = H - E1 - E2 - E3.
    const std::int64_t c[4] = {1, -1, -1, -1};
    const std::int64_t g[4] = {1, -1, -1, -1};  // diagonal of the pairing
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t col = 0; col < 4; ++col) e[r * n + col] += c[r] * g[col] * c[col];
    return LatticeMap(k, std::move(e));
  }
  const auto& source = std::get<SortStep>(step).source;
  if (source.size() != k) throw DimensionMismatch("sort permutation length differs from k");
  e[0] = 1;
  for (std::size_t i = 1; i <= k; ++i) e[i * n + source[i - 1]] = 1;
  return LatticeMap(k, std::move(e));
}

LatticeMap lattice_map(const ReductionTrace& trace) {
  LatticeMap total = LatticeMap::identity(trace.input.k());
  for (const auto& step : trace.steps) total = lattice_map(step, trace.input.k()).compose(total);
  return total;
}

}  // namespace symwidth
