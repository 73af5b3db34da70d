#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "symwidth/cremona.hpp"
#include "symwidth/json_io.hpp"
#include "symwidth/sixfold.hpp"

using namespace symwidth;

namespace {

HomologyClass cls(std::initializer_list<long> c) { return HomologyClass::from_integers(std::vector<long>(c)); }
PeriodVector per(std::initializer_list<Rational> a) { return PeriodVector(std::vector<Rational>(a)); }

/// Random product of Cremona reflections and coordinate permutations.
LatticeMap random_isometry(std::mt19937_64& g, std::size_t k) {
  LatticeMap m = LatticeMap::identity(k);
  const int factors = static_cast<int>(oracle::uniform(g, 1, 6));
  for (int f = 0; f < factors; ++f) {
    std::vector<std::size_t> source(k);
    std::iota(source.begin(), source.end(), std::size_t{1});
    std::shuffle(source.begin(), source.end(), g);
    m = lattice_map(SortStep{source}, k).compose(m);
    if (k >= 3) m = lattice_map(CremonaStep{}, k).compose(m);
  }
  return m;
}

WidthGapCertificate expect_certificate(const CertificateOutcome& o) {
  if (const auto* r = std::get_if<Refusal>(&o)) FAIL("refused: " << r->message);
  return std::get<WidthGapCertificate>(o);
}

}  // namespace

TEST_CASE("verify_isometry examples") {
  CHECK(verify_isometry(LatticeMap::identity(2), 2));
  CHECK(verify_isometry(LatticeMap(2, {1, 0, 0, 0, 0, 1, 0, 1, 0}), 2));
  CHECK_FALSE(verify_isometry(LatticeMap(1, {1, 1, 0, -1}), 1));
  CHECK_THROWS_AS(verify_isometry(LatticeMap::identity(2), 3), DimensionMismatch);
  CHECK(fixes_last_classes(lattice_map(CremonaStep{}, 4), 1));
  CHECK_FALSE(fixes_last_classes(lattice_map(CremonaStep{}, 3), 1));
}

TEST_CASE("extend_and_transport examples") {
  const auto p = extend_and_transport(LatticeMap::identity(2), per({3, 1, 1}), 3);
  CHECK(p.base == per({3, 1, 1}));
  CHECK(p.sphere_area == 3);
  auto g = oracle::rng(51);
  const LatticeMap phi = random_isometry(g, 2);
  const auto q = extend_and_transport(phi, per({3, 1, 1}), 3);
  CHECK(square(q.base) == 7);
  CHECK(pair(q.base.poincare_dual(), extend_and_transport(phi, canonical_class(2))) == -7);
  CHECK_THROWS_AS(extend_and_transport(LatticeMap(1, {1, 1, 0, -1}), per({3, 1}), 3), PreconditionError);
  CHECK_THROWS_AS(extend_and_transport(lattice_map(CremonaStep{}, 3), per({3, 1, 1, 1}), 3, 1), PreconditionError);
}

TEST_CASE("transport preserves the pairing exactly") {
  auto g = oracle::rng(52);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = static_cast<std::size_t>(oracle::uniform(g, 1, 9));
    const LatticeMap phi = random_isometry(g, k);
    REQUIRE(verify_isometry(phi, k));
    const auto x = oracle::random_integral_class(g, k, 6);
    const auto y = oracle::random_integral_class(g, k, 6);
    CHECK(pair(extend_and_transport(phi, x), extend_and_transport(phi, y)) == pair(x, y));
    const PeriodVector w = oracle::random_reduced(g, k);
    const auto moved = extend_and_transport(phi, w, 1);
    CHECK(square(moved.base) == square(w));
    CHECK(area(moved.base, extend_and_transport(phi, x)) == area(w, x));
  }
}

TEST_CASE("chern_difference examples") {
  const auto c = chern_difference(per({3, 1, 1}));
  CHECK(c.differ);
  CHECK(c.witness == -7);
  std::vector<Rational> twelve{4};
  twelve.resize(13, Rational(6, 5));
  const auto t = chern_difference(PeriodVector(twelve));
  CHECK_FALSE(t.differ);
  CHECK(t.witness == Rational(12, 5));
}

TEST_CASE("reduced vectors with k <= 9 have negative canonical pairing") {
  auto g = oracle::rng(53);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t k = static_cast<std::size_t>(oracle::uniform(g, 0, 9));
    const PeriodVector w = oracle::random_reduced(g, k);
    CHECK(chern_difference(w).differ);
  }
}

TEST_CASE("product topology") {
  for (std::size_t k = 0; k <= 10; ++k) {
    const auto t = product_topology(k);
    CHECK(t.signature == 1 - static_cast<int>(k));
    CHECK(t.p1_coefficient == 3 * (1 - static_cast<int>(k)));
    REQUIRE(t.w2.size() == k + 1);
    for (int bit : t.w2) CHECK(bit == 1);
  }
}

TEST_CASE("certificate for (3;1,1) with sphere area 3") {
  const auto cert = expect_certificate(width_gap_certificate(2, 1, per({3, 1, 1}), 3));
  CHECK(cert.exotic_width_lower == Magnitude::sqrt_of(7));
  CHECK(cert.standard_width_upper == 2);
  CHECK(cert.gap.sign() == 1);
  CHECK(cert.gap.to_string() == "sqrt(7) - 2");
  CHECK(cert.chern_differ);
  CHECK(cert.chern_witness == -7);
  CHECK(cert.transported_chern_witness == -7);
  CHECK(cert.standard_side.base == cert.exotic_side.base);
  CHECK(cert.standard_side.sphere_area == 3);
  CHECK(cert.standard_cone.is_member());
  CHECK(cert.exotic_cone.is_member());
  CHECK(cert.tail_halvings == 0);
  CHECK_FALSE(cert.hypotheses.empty());
  CHECK(validate_certificate(cert).empty());
}

TEST_CASE("certificate refusals") {
  {
    const auto o = width_gap_certificate(2, 1, per({3, 1, 1}), 2);
    REQUIRE(std::holds_alternative<Refusal>(o));
    CHECK(std::get<Refusal>(o).reason == RefusalReason::insufficient_sphere_area);
    CHECK(std::get<Refusal>(o).message.find("insufficient sphere area") != std::string::npos);
  }
  {
    const auto o = width_gap_certificate(2, 1, per({3, 1, -1}), 3);
    REQUIRE(std::holds_alternative<Refusal>(o));
    const auto& r = std::get<Refusal>(o);
    CHECK(r.reason == RefusalReason::cone_violation);
    REQUIRE(r.violator);
    CHECK(*r.violator == cls({0, 0, 1}));
  }
  {
    const auto o = width_gap_certificate(2, 1, per({3, 1, 0}), 3);
    REQUIRE(std::holds_alternative<Refusal>(o));
    CHECK(std::get<Refusal>(o).reason == RefusalReason::cone_violation);
  }
  {
    const auto o = width_gap_certificate(3, 1, per({5, 1, 1, 2}), 5);
    REQUIRE(std::holds_alternative<Refusal>(o));
    CHECK(std::get<Refusal>(o).reason == RefusalReason::not_reduced);
  }
  {
    const auto o = width_gap_certificate(2, 1, per({3, 1, 1}), 3, LatticeMap(2, {1, 1, 0, 0, -1, 0, 0, 0, 1}));
    REQUIRE(std::holds_alternative<Refusal>(o));
    CHECK(std::get<Refusal>(o).reason == RefusalReason::bad_isometry);
  }
  {
    // Swapping E1 and E2 moves the last class when l = 2.
    const auto o = width_gap_certificate(2, 2, per({3, 1, 1}), 3, LatticeMap(2, {1, 0, 0, 0, 0, 1, 0, 1, 0}));
    REQUIRE(std::holds_alternative<Refusal>(o));
    CHECK(std::get<Refusal>(o).reason == RefusalReason::bad_isometry);
  }
  CHECK_THROWS_AS(width_gap_certificate(2, 0, per({3, 1, 1}), 3), PreconditionError);
  CHECK_THROWS_AS(width_gap_certificate(2, 3, per({3, 1, 1}), 3), PreconditionError);
  CHECK_THROWS_AS(width_gap_certificate(3, 1, per({3, 1, 1}), 3), DimensionMismatch);
  CHECK(std::string(to_string(RefusalReason::insufficient_sphere_area)) == "insufficient-sphere-area");
}

TEST_CASE("k = 5 goes through the tail deformation") {
  const auto cert = expect_certificate(width_gap_certificate(5, 1, per({3, 1, 1, 1, 1, 1}), 3));
  CHECK(cert.period == per({3, 1, 1, 1, 1, Rational(1, 2)}));
  CHECK(cert.tail_halvings == 1);
  CHECK(cert.upper_bound.strict_margin == Rational(3, 4));
  CHECK(cert.chern_witness == Rational(-9, 2));
  CHECK(cert.gap.sign() == 1);
  CHECK(validate_certificate(cert).empty());
}

TEST_CASE("k = 12 is deformed until the canonical pairing is negative") {
  // (4;1,...,1) is reduced with K-pairing exactly 0.
  std::vector<Rational> v{4};
  v.resize(13, Rational(1));
  REQUIRE(chern_difference(PeriodVector(v)).witness == 0);
  const auto cert = expect_certificate(width_gap_certificate(12, 2, PeriodVector(v), 4));
  CHECK(cert.tail_halvings >= 1);
  CHECK(cert.chern_differ);
  CHECK(validate_certificate(cert).empty());
}

TEST_CASE("certificate through a nontrivial isometry") {
  const LatticeMap phi = lattice_map(CremonaStep{}, 4);
  const auto cert = expect_certificate(width_gap_certificate(4, 1, per({5, 2, 1, 1, 1}), 5, phi));
  CHECK(cert.exotic_side.base == per({6, 3, 2, 2, 1}));
  CHECK(square(cert.exotic_side.base) == square(cert.standard_side.base));
  CHECK(cert.transported_chern_witness == cert.chern_witness);
  CHECK(validate_certificate(cert).empty());
}

TEST_CASE("random certificates validate") {
  auto g = oracle::rng(54);
  int emitted = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = static_cast<std::size_t>(oracle::uniform(g, 1, 9));
    const std::size_t l = static_cast<std::size_t>(oracle::uniform(g, 1, static_cast<long>(k)));
    const PeriodVector w = oracle::random_reduced(g, k);
    const auto o = width_gap_certificate(k, l, w, w.a());
    if (const auto* cert = std::get_if<WidthGapCertificate>(&o)) {
      ++emitted;
      CHECK(cert->gap.sign() == 1);
      CHECK(cert->chern_differ == (sgn(cert->chern_witness) < 0));
      CHECK(validate_certificate(*cert).empty());
    }
  }
  CHECK(emitted > 30);
}

TEST_CASE("the checker catches tampering") {
  const auto good = expect_certificate(width_gap_certificate(2, 1, per({3, 1, 1}), 3));
  auto tampered = [&](auto edit) {
    WidthGapCertificate c = good;
    edit(c);
    return validate_certificate(c);
  };
  CHECK_FALSE(tampered([](auto& c) { c.standard_width_upper = 3; }).empty());
  CHECK_FALSE(tampered([](auto& c) { c.exotic_width_lower = Magnitude::sqrt_of(8); }).empty());
  CHECK_FALSE(tampered([](auto& c) { c.sphere_area = 2; }).empty());
  CHECK_FALSE(tampered([](auto& c) { c.chern_witness = 7; }).empty());
  CHECK_FALSE(tampered([](auto& c) { c.chern_differ = false; }).empty());
  CHECK_FALSE(tampered([](auto& c) { c.exotic_side.base = per({3, 1, 2}); }).empty());
  CHECK_FALSE(tampered([](auto& c) { c.phi = LatticeMap(2, {1, 1, 0, 0, -1, 0, 0, 0, 1}); }).empty());
  CHECK_FALSE(tampered([](auto& c) { c.period = per({3, 2, 1}); }).empty());
  CHECK_FALSE(tampered([](auto& c) { c.hypotheses.clear(); }).empty());
  CHECK_FALSE(tampered([](auto& c) { c.standard_cone.checked_bound = 0; }).empty());
}

TEST_CASE("certificate JSON round trip") {
  const auto cert = expect_certificate(width_gap_certificate(5, 1, per({3, 1, 1, 1, 1, 1}), 3));
  const io::Json j = io::to_json(cert);
  const auto back = io::certificate_from_json(io::Json::parse(j.dump()));
  CHECK(validate_certificate(back).empty());
  CHECK(io::to_json(back) == j);
  io::Json broken = j;
  broken["gap"]["sign"] = -1;
  broken.erase("period");
  CHECK_THROWS_AS(io::certificate_from_json(broken), ParseError);
}
