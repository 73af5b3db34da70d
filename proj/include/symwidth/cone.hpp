#pragma once

#include <optional>
#include <span>

#include "symwidth/exceptional.hpp"
#include "symwidth/lattice.hpp"

namespace symwidth {

enum class ConeStatus { member, not_positive_square, wrong_orientation, violated };

struct ConeVerdict {
  ConeStatus status = ConeStatus::member;
  /// Present exactly when status is violated; an exceptional class of area <= 0.
  std::optional<HomologyClass> violator;
  /// Largest exceptional degree examined.
  long checked_bound = 0;

  bool is_member() const { return status == ConeStatus::member; }
};

const char* to_string(ConeStatus status);

/// Symplectic cone of CP^2 # k(-CP^2) for the standard canonical class:
/// positive square, a > 0, and positive area on every exceptional class up
/// to max(violator_degree_bound(w), 6 when k <= 8).
ConeVerdict liliu_membership(const PeriodVector& w);

/// Union of the K+ and K- cones of an exotic rational manifold whose
/// exceptional classes are the last l basis classes.
ConeVerdict kpm_membership(const PeriodVector& w, std::size_t l);

/// Index of the first class with area(w, c) <= 0, scanning in parallel.
std::optional<std::size_t> first_violator(const PeriodVector& w, std::span<const HomologyClass> classes);
/// Single-threaded reference for first_violator.
std::optional<std::size_t> first_violator_serial(const PeriodVector& w, std::span<const HomologyClass> classes);

}  // namespace symwidth
