#pragma once

// Test-only reference computations. Nothing here calls the enumeration or
// reduction code under test; classes are plain integer vectors (d, e1..ek).

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "symwidth/lattice.hpp"

namespace oracle {

using Vec = std::vector<long>;

/// Exhaustive odometer over the full box |e_i| <= d + 1 for every degree.
inline std::set<Vec> box_exceptional(std::size_t k, long degree_bound) {
  std::set<Vec> found;
  for (long d = 0; d <= degree_bound; ++d) {
    const long r = d + 1;
    Vec e(k, -r);
    for (;;) {
      long sum = 0, squares = 0;
      for (long x : e) {
        sum += x;
        squares += x * x;
      }
      if (d * d - squares == -1 && 3 * d + sum == 1) {
        Vec c{d};
        c.insert(c.end(), e.begin(), e.end());
        found.insert(c);
      }
      std::size_t i = 0;
      while (i < k && e[i] == r) e[i++] = -r;
      if (i == k) break;
      ++e[i];
    }
  }
  return found;
}

/// Same box, but coordinates are abandoned once the partial sum of squares
/// exceeds d^2 + 1. Used where the full box is too large (k = 7, 8).
inline std::set<Vec> pruned_box_exceptional(std::size_t k, long degree_bound) {
  std::set<Vec> found;
  for (long d = 0; d <= degree_bound; ++d) {
    const long budget = d * d + 1;
    Vec e;
    std::function<void(long, long)> walk = [&](long sum, long squares) {
      if (e.size() == k) {
        if (squares == budget && 3 * d + sum == 1) {
          Vec c{d};
          c.insert(c.end(), e.begin(), e.end());
          found.insert(c);
        }
        return;
      }
      for (long x = -(d + 1); x <= d + 1; ++x) {
        if (squares + x * x > budget) continue;
        e.push_back(x);
        walk(sum + x, squares + x * x);
        e.pop_back();
      }
    };
    walk(0, 0);
  }
  return found;
}

/// Box search over e_1..e_{k-1}; e_k is solved from 3d + sum e = 1 and the
/// quadratic condition is checked. One dimension cheaper than the full box.
inline std::set<Vec> solved_box_exceptional(std::size_t k, long degree_bound) {
  std::set<Vec> found;
  if (k == 0) return found;
  for (long d = 0; d <= degree_bound; ++d) {
    const long budget = d * d + 1;
    Vec e;
    std::function<void(long, long)> walk = [&](long sum, long squares) {
      if (e.size() + 1 == k) {
        const long last = 1 - 3 * d - sum;
        if (squares + last * last == budget) {
          Vec c{d};
          c.insert(c.end(), e.begin(), e.end());
          c.push_back(last);
          found.insert(c);
        }
        return;
      }
      for (long x = -(d + 1); x <= d + 1; ++x) {
        if (squares + x * x > budget) continue;
        e.push_back(x);
        walk(sum + x, squares + x * x);
        e.pop_back();
      }
    };
    walk(0, 0);
  }
  return found;
}

/// Cone membership by direct scan of an oracle exceptional set.
inline bool scan_member(const symwidth::PeriodVector& w, const std::set<Vec>& classes) {
  using symwidth::Rational;
  Rational sq = w.a() * w.a();
  for (std::size_t i = 1; i <= w.k(); ++i) sq -= w.b(i) * w.b(i);
  if (sgn(sq) <= 0 || sgn(w.a()) <= 0) return false;
  for (const auto& c : classes) {
    Rational area = w.a() * c[0];
    for (std::size_t i = 1; i <= w.k(); ++i) area += w.b(i) * c[i];
    if (sgn(area) <= 0) return false;
  }
  return true;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline long uniform(std::mt19937_64& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

inline symwidth::Rational random_rational(std::mt19937_64& g, long lo, long hi, long max_den) {
  symwidth::Rational q(uniform(g, lo, hi), uniform(g, 1, max_den));
  q.canonicalize();
  return q;
}

/// Positive rational in (0, 1] * scale.
inline symwidth::Rational random_positive(std::mt19937_64& g, long scale, long max_den) {
  symwidth::Rational q(uniform(g, 1, scale * max_den), max_den);
  q.canonicalize();
  return q;
}

/// Random reduced period vector with all b_i > 0: b descending, a chosen at
/// or above b1 + b2 + b3 when k >= 3 (b1 + b2 for k = 2, strictly above b1
/// for k = 1 so the square is positive).
inline symwidth::PeriodVector random_reduced(std::mt19937_64& g, std::size_t k, long scale = 20, long max_den = 6) {
  std::vector<symwidth::Rational> b;
  for (std::size_t i = 0; i < k; ++i) b.push_back(random_positive(g, scale, max_den));
  std::sort(b.begin(), b.end(), std::greater<>());
  symwidth::Rational lead = 0;
  for (std::size_t i = 0; i < std::min<std::size_t>(3, k); ++i) lead += b[i];
  symwidth::Rational slack = uniform(g, 0, 3) == 0 ? symwidth::Rational(0) : random_positive(g, scale, max_den);
  if (k == 1 && sgn(slack) == 0) slack = symwidth::Rational(1, max_den);
  if (k == 0) slack = random_positive(g, scale, max_den);
  std::vector<symwidth::Rational> areas{lead + slack};
  areas.insert(areas.end(), b.begin(), b.end());
  return symwidth::PeriodVector(std::move(areas));
}

inline symwidth::HomologyClass random_integral_class(std::mt19937_64& g, std::size_t k, long range) {
  std::vector<symwidth::Rational> c;
  for (std::size_t i = 0; i <= k; ++i) c.emplace_back(uniform(g, -range, range));
  return symwidth::HomologyClass(std::move(c));
}

}  // namespace oracle
