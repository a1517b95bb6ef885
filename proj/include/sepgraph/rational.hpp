#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace sepgraph {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction in lowest terms with a positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long long value) : v_(value) {} // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Accepts "p/q", an integer, or a plain decimal such as "0.25" or "-1.5";
  /// decimals are converted exactly (0.99 becomes 99/100).
  static Rational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  bool is_integer() const { return denominator() == 1; }
  int sign() const;
  double to_double() const;

  /// Always "p/q", including integers ("3/1").
  std::string to_string() const;

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  BigInt floor() const;
  BigInt ceil() const;

  /// If this is the square of a rational, writes the non-negative root.
  bool exact_sqrt(Rational& root) const;

  Rational operator-() const { return Rational(boost::multiprecision::cpp_rational(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

private:
  explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
  boost::multiprecision::cpp_rational v_;
};

/// Rational extended with +infinity; used for toughness-type minima that are
/// infinite on complete graphs. Serialized as "inf".
class ExtRational {
public:
  static ExtRational infinity() { return ExtRational(); }
  ExtRational(Rational value) : finite_(true), value_(std::move(value)) {} // NOLINT

  bool is_infinite() const { return !finite_; }
  /// Throws DomainError when infinite.
  const Rational& value() const;
  std::string to_string() const { return finite_ ? value_.to_string() : "inf"; }
  double to_double() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (!a.finite_ || !b.finite_) {
      if (a.finite_ == b.finite_) return std::strong_ordering::equal;
      return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.value_ <=> b.value_;
  }

private:
  ExtRational() = default;
  bool finite_ = false;
  Rational value_;
};

} // namespace sepgraph
