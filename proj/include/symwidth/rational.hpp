#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace symwidth {

using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown when an argument does not satisfy an operation's precondition.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when two lattice objects live over different blowup counts.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by parse_rational on anything that is not "p" or "p/q".
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p" or "p/q" (optional leading sign, q > 0). Result is canonical.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q".
std::string to_string(const Rational& q);

/// floor(sqrt(q)) for q >= 0.
Integer floor_sqrt(const Rational& q);

bool is_perfect_square(const Rational& q);

/// Nonnegative real number of the form sqrt(q) with q rational, or +infinity.
///
/// Every width in this library is such a value, so all comparisons reduce to
/// comparing radicands.
class Magnitude {
 public:
  Magnitude() = default;

  static Magnitude sqrt_of(const Rational& radicand);
  static Magnitude of(const Rational& value);
  static Magnitude infinity();

  bool is_infinite() const { return infinite_; }
  /// The square of the value. Meaningless when infinite.
  const Rational& radicand() const { return radicand_; }
  /// The value itself when it is rational.
  bool is_rational() const;
  Rational rational_value() const;

  Magnitude scaled(const Rational& factor) const;
  double approx() const;

  /// "inf", "p/q" when rational, otherwise "sqrt(p/q)".
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Magnitude& x, const Magnitude& y);
  friend bool operator==(const Magnitude& x, const Magnitude& y) {
    return (x <=> y) == std::strong_ordering::equal;
  }

 private:
  bool infinite_ = false;
  Rational radicand_ = 0;
};

/// Symbolic difference minuend - subtrahend of two finite magnitudes.
struct MagnitudeDifference {
  Magnitude minuend;
  Magnitude subtrahend;

  /// -1, 0 or +1, decided exactly.
  int sign() const;
  double approx() const { return minuend.approx() - subtrahend.approx(); }
  std::string to_string() const;
};

}  // namespace symwidth
