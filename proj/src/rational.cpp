#include "symwidth/rational.hpp"

#include <cmath>
#include <limits>
#include <regex>

namespace symwidth {

Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"(^[+-]?[0-9]+(/[0-9]+)?$)");
  const std::string s(text);
  if (!std::regex_match(s, pattern)) {
    throw ParseError("malformed rational literal '" + s + "'");
  }
  const auto slash = s.find('/');
  std::string numerator = s.substr(0, slash);
  if (!numerator.empty() && numerator.front() == '+') numerator.erase(0, 1);
  Integer num(numerator, 10);
  Integer den = 1;
  if (slash != std::string::npos) {
    den = Integer(s.substr(slash + 1), 10);
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Integer floor_sqrt(const Rational& q) {
  if (sgn(q) < 0) throw PreconditionError("floor_sqrt of a negative number");
  Integer whole = q.get_num() / q.get_den();  // truncation equals floor for q >= 0
  return sqrt(whole);
}

bool is_perfect_square(const Rational& q) {
  if (sgn(q) < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

Magnitude Magnitude::sqrt_of(const Rational& radicand) {
  if (sgn(radicand) < 0) throw PreconditionError("square root of a negative number");
  Magnitude m;
  m.radicand_ = radicand;
  return m;
}

Magnitude Magnitude::of(const Rational& value) {
  if (sgn(value) < 0) throw PreconditionError("magnitude of a negative number");
  return sqrt_of(value * value);
}

Magnitude Magnitude::infinity() {
  Magnitude m;
  m.infinite_ = true;
  return m;
}

bool Magnitude::is_rational() const { return !infinite_ && is_perfect_square(radicand_); }

Rational Magnitude::rational_value() const {
  if (!is_rational()) throw PreconditionError("magnitude is not rational");
  Rational r(sqrt(radicand_.get_num()), sqrt(radicand_.get_den()));
  r.canonicalize();
  return r;
}

Magnitude Magnitude::scaled(const Rational& factor) const {
  if (sgn(factor) < 0) throw PreconditionError("negative scale factor");
  if (infinite_) return *this;
  return sqrt_of(factor * factor * radicand_);
}

double Magnitude::approx() const {
  if (infinite_) return std::numeric_limits<double>::infinity();
  return std::sqrt(radicand_.get_d());
}

std::string Magnitude::to_string() const {
  if (infinite_) return "inf";
  if (is_rational()) return symwidth::to_string(rational_value());
  return "sqrt(" + symwidth::to_string(radicand_) + ")";
}

std::strong_ordering operator<=>(const Magnitude& x, const Magnitude& y) {
  if (x.infinite_ || y.infinite_) {
    if (x.infinite_ && y.infinite_) return std::strong_ordering::equal;
    return x.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  const int c = cmp(x.radicand_, y.radicand_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int MagnitudeDifference::sign() const {
  if (minuend.is_infinite() || subtrahend.is_infinite()) {
    throw PreconditionError("difference of infinite magnitudes");
  }
  const auto order = minuend <=> subtrahend;
  if (order == std::strong_ordering::less) return -1;
  if (order == std::strong_ordering::greater) return 1;
  return 0;
}

std::string MagnitudeDifference::to_string() const {
  return minuend.to_string() + " - " + subtrahend.to_string();
}

}  // namespace symwidth
