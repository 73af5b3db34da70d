#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "symwidth/cone.hpp"
#include "symwidth/cremona.hpp"

using namespace symwidth;

namespace {

HomologyClass cls(std::initializer_list<long> c) { return HomologyClass::from_integers(std::vector<long>(c)); }
PeriodVector per(std::initializer_list<Rational> a) { return PeriodVector(std::vector<Rational>(a)); }

PeriodVector random_positive_square(std::mt19937_64& g, std::size_t k) {
  for (;;) {
    std::vector<Rational> a{oracle::random_positive(g, 12, 5)};
    for (std::size_t i = 0; i < k; ++i) a.push_back(oracle::random_rational(g, -6, 10, 5));
    PeriodVector w(std::move(a));
    if (sgn(square(w)) > 0) return w;
  }
}

}  // namespace

TEST_CASE("Li-Liu examples") {
  CHECK(liliu_membership(per({2, 1})).status == ConeStatus::member);
  CHECK(liliu_membership(per({2, 2})).status == ConeStatus::not_positive_square);
  const auto v = liliu_membership(per({1, Rational(-1, 2)}));
  CHECK(v.status == ConeStatus::violated);
  REQUIRE(v.violator);
  CHECK(*v.violator == cls({0, 1}));
  CHECK(liliu_membership(per({-2, 1})).status == ConeStatus::wrong_orientation);
  CHECK(liliu_membership(per({3, 1, 1})).is_member());
  CHECK(liliu_membership(per({3, 1, 1})).checked_bound == 6);
  // a < b1 + b2 puts H - E1 - E2 at negative area.
  const auto w = liliu_membership(per({3, 2, 2}));
  CHECK(w.status == ConeStatus::violated);
  CHECK(*w.violator == cls({1, -1, -1}));
  CHECK(std::string(to_string(ConeStatus::not_positive_square)) == "not-positive-square");
}

TEST_CASE("K-plus-minus examples") {
  CHECK(kpm_membership(per({3, 1, 1}), 1).is_member());
  const auto v = kpm_membership(per({3, 1, -1}), 1);
  CHECK(v.status == ConeStatus::violated);
  REQUIRE(v.violator);
  CHECK(*v.violator == cls({0, 0, 1}));
  CHECK(kpm_membership(per({3, 1, -1}), 0).is_member());
  CHECK(kpm_membership(per({1, 2}), 0).status == ConeStatus::not_positive_square);
  CHECK_THROWS_AS(kpm_membership(per({3, 1}), 2), PreconditionError);
}

TEST_CASE("verdict agrees with an oracle scanning twice the cutoff, k <= 4") {
  auto g = oracle::rng(31);
  int members = 0;
  for (int checked = 0; checked < 200;) {
    const std::size_t k = static_cast<std::size_t>(oracle::uniform(g, 1, 4));
    const PeriodVector w = random_positive_square(g, k);
    CAPTURE(to_string(w));
    const long cutoff = std::max(violator_degree_bound(w), 6L);
    // Near the light cone the doubled oracle box gets too large.
    if (cutoff > 20) continue;
    ++checked;
    const auto verdict = liliu_membership(w);
    CHECK(verdict.is_member() == oracle::scan_member(w, oracle::pruned_box_exceptional(k, 2 * cutoff)));
    if (verdict.is_member()) ++members;
  }
  CHECK(members > 0);
}

TEST_CASE("verdicts are scale and permutation invariant") {
  auto g = oracle::rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = static_cast<std::size_t>(oracle::uniform(g, 1, 7));
    const PeriodVector w = random_positive_square(g, k);
    const Rational t = oracle::random_positive(g, 5, 7);
    const bool base = liliu_membership(w).is_member();
    CHECK(liliu_membership(w.scaled(t)).is_member() == base);
    std::vector<Rational> b(w.areas().begin() + 1, w.areas().end());
    std::shuffle(b.begin(), b.end(), g);
    std::vector<Rational> a{w.a()};
    a.insert(a.end(), b.begin(), b.end());
    CHECK(liliu_membership(PeriodVector(a)).is_member() == base);
  }
}

TEST_CASE("members reduce to the positive reduced chamber, violators do not") {
  auto g = oracle::rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = static_cast<std::size_t>(oracle::uniform(g, 3, 8));
    const PeriodVector w = random_positive_square(g, k);
    CAPTURE(to_string(w));
    const auto verdict = liliu_membership(w);
    const auto r = reduce(w);
    if (verdict.is_member()) {
      CHECK(r.status == ReductionStatus::reduced);
      CHECK(has_positive_entries(r.vector));
    } else {
      const bool positive = r.status == ReductionStatus::reduced && has_positive_entries(r.vector);
      CHECK_FALSE(positive);
    }
  }
}

TEST_CASE("violators are exceptional with non-positive area") {
  auto g = oracle::rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = static_cast<std::size_t>(oracle::uniform(g, 1, 9));
    const PeriodVector w = random_positive_square(g, k);
    const auto v = liliu_membership(w);
    if (v.status != ConeStatus::violated) continue;
    REQUIRE(v.violator);
    CHECK(is_exceptional(*v.violator));
    CHECK(sgn(area(w, *v.violator)) <= 0);
    CHECK(v.violator->degree() <= v.checked_bound);
  }
}

TEST_CASE("first_violator: serial and parallel agree") {
  auto g = oracle::rng(35);
  const auto classes = enumerate_exceptional(8, 6).classes;
  for (int trial = 0; trial < 200; ++trial) {
    const PeriodVector w = random_positive_square(g, 8);
    CHECK(first_violator(w, classes) == first_violator_serial(w, classes));
  }
  CHECK_FALSE(first_violator(per({3, 1, 1}), std::span<const HomologyClass>{}).has_value());
}
