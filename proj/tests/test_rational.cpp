#include <doctest.h>

#include "symwidth/rational.hpp"

using namespace symwidth;

TEST_CASE("parse_rational accepts p and p/q and canonicalizes") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("+2/4") == Rational(1, 2));
  CHECK(to_string(parse_rational("12/8")) == "3/2");
  CHECK(to_string(parse_rational("0/5")) == "0");
}

TEST_CASE("parse_rational rejects malformed literals") {
  for (const char* bad : {"", "1.5", "1/0", "a", "1/2/3", "--1", "1 /2", "1/-2", "0x10"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
}

TEST_CASE("floor_sqrt and perfect squares") {
  CHECK(floor_sqrt(Rational(81, 19)) == 2);
  CHECK(floor_sqrt(Rational(2, 7)) == 0);
  CHECK(floor_sqrt(Rational(16)) == 4);
  CHECK(floor_sqrt(Rational(15)) == 3);
  CHECK_THROWS_AS(floor_sqrt(Rational(-1)), PreconditionError);
  CHECK(is_perfect_square(Rational(4, 9)));
  CHECK_FALSE(is_perfect_square(Rational(8, 9)));
  CHECK_FALSE(is_perfect_square(Rational(-4)));
}

TEST_CASE("Magnitude compares exactly through radicands") {
  const auto root7 = Magnitude::sqrt_of(7);
  const auto two = Magnitude::of(2);
  CHECK(two < root7);
  CHECK(root7 < Magnitude::of(3));
  CHECK(Magnitude::sqrt_of(Rational(4, 9)) == Magnitude::of(Rational(2, 3)));
  CHECK(root7 < Magnitude::infinity());
  CHECK(Magnitude::infinity() == Magnitude::infinity());
  CHECK(root7.to_string() == "sqrt(7)");
  CHECK(Magnitude::of(Rational(2, 3)).to_string() == "2/3");
  CHECK(Magnitude::infinity().to_string() == "inf");
  CHECK(root7.scaled(Rational(1, 2)) == Magnitude::sqrt_of(Rational(7, 4)));
  CHECK(Magnitude::sqrt_of(Rational(25, 4)).rational_value() == Rational(5, 2));
  CHECK_THROWS_AS(Magnitude::sqrt_of(-1), PreconditionError);
}

TEST_CASE("MagnitudeDifference sign") {
  CHECK(MagnitudeDifference{Magnitude::sqrt_of(7), Magnitude::of(2)}.sign() == 1);
  CHECK(MagnitudeDifference{Magnitude::of(2), Magnitude::sqrt_of(4)}.sign() == 0);
  CHECK(MagnitudeDifference{Magnitude::sqrt_of(3), Magnitude::of(2)}.sign() == -1);
  CHECK(MagnitudeDifference{Magnitude::sqrt_of(7), Magnitude::of(2)}.to_string() == "sqrt(7) - 2");
}
