#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "symwidth/lattice.hpp"

namespace symwidth {

/// Reorders the exceptional coordinates: after the step, E_i carries what
/// E_{source[i-1]} carried before (indices are 1-based).
struct SortStep {
  std::vector<std::size_t> source;
  friend bool operator==(const SortStep&, const SortStep&) = default;
};

/// Reflection in H - E_1 - E_2 - E_3.
struct CremonaStep {
  friend bool operator==(const CremonaStep&, const CremonaStep&) = default;
};

using ReductionStep = std::variant<SortStep, CremonaStep>;

struct ReductionTrace {
  PeriodVector input;
  PeriodVector output;
  std::vector<ReductionStep> steps;
};

enum class ReductionStatus {
  reduced,
  /// Some area became negative; the class lies outside the orbit of
  /// nonnegative reduced vectors.
  negative_entry,
};

struct ReductionOutcome {
  ReductionStatus status = ReductionStatus::reduced;
  /// The reduced vector, or the last vector reached before the verdict.
  PeriodVector vector;
  ReductionTrace trace;
  /// For negative_entry: an exceptional class with negative area on the input.
  std::optional<HomologyClass> obstruction;
};

bool is_sorted_descending(const PeriodVector& v);
/// a >= b_1 + b_2 + b_3 (fewer terms when k < 3), b sorted descending, b_i >= 0.
bool is_reduced(const PeriodVector& v);
/// All b_i > 0; reported separately from reducedness.
bool has_positive_entries(const PeriodVector& v);

/// (a; b) -> (2a-b1-b2-b3; a-b2-b3, a-b1-b3, a-b1-b2, b4, ...).
/// Requires k >= 3, sorted input and a < b1+b2+b3.
PeriodVector cremona_step(const PeriodVector& v);

/// Alternates sorting and Cremona moves until the vector is reduced or an
/// entry goes negative. Requires square(v) > 0 and a > 0.
ReductionOutcome reduce(const PeriodVector& v);

PeriodVector apply_step(const ReductionStep& step, const PeriodVector& v);
PeriodVector replay(const ReductionTrace& trace);

/// The isometry g of the homology lattice induced by a step. Classes move by
/// g and periods move by g on their Poincare duals, so areas are preserved.
LatticeMap lattice_map(const ReductionStep& step, std::size_t k);
/// Composite map of the whole trace (last step applied last).
LatticeMap lattice_map(const ReductionTrace& trace);

}  // namespace symwidth
