#pragma once

#include "sepgraph/rational.hpp"

#include <compare>
#include <string>

namespace sepgraph {

/// Exact element a + b*sqrt(d) of a real quadratic extension of the
/// rationals, with d >= 0 a rational that is not a perfect square whenever
/// b != 0. Carries an exact separation parameter beta = sqrt(beta^2) through
/// the bound formulas so that every comparison is decided without rounding.
///
/// Operands combined by + - * / must share the radicand unless one of them
/// is rational (b == 0); mixing two different radicands is a DomainError.
class Surd {
public:
  Surd() = default;
  Surd(Rational a) : a_(std::move(a)) {} // NOLINT(google-explicit-constructor)
  Surd(long long a) : a_(a) {}           // NOLINT(google-explicit-constructor)

  /// sqrt(value) for value >= 0; collapses to a rational when value is a
  /// perfect square.
  static Surd sqrt(const Rational& value);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_coefficient() const { return b_; }
  const Rational& radicand() const { return d_; }
  bool is_rational() const { return b_.sign() == 0; }

  /// Exact sign, decided by comparing a^2 against b^2*d when the parts
  /// disagree in sign.
  int sign() const;
  double to_double() const;
  std::string to_string() const;

  BigInt floor() const;
  BigInt ceil() const;

  Surd operator-() const;
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o) { return *this += -o; }
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o);

  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
  friend Surd operator/(Surd a, const Surd& b) { return a /= b; }

  friend bool operator==(const Surd& x, const Surd& y) { return (x - y).sign() == 0; }
  friend std::strong_ordering operator<=>(const Surd& x, const Surd& y) {
    const int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

private:
  Surd(Rational a, Rational b, Rational d);
  const Rational& shared_radicand(const Surd& o) const;

  Rational a_;
  Rational b_;
  Rational d_;
};

} // namespace sepgraph
