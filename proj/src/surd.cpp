#include "sepgraph/surd.hpp"

#include "sepgraph/error.hpp"

#include <cmath>

namespace sepgraph {

Surd::Surd(Rational a, Rational b, Rational d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (b_.sign() == 0) d_ = Rational(0);
}

Surd Surd::sqrt(const Rational& value) {
  if (value.sign() < 0) throw DomainError("square root of a negative rational");
  Rational root;
  if (value.exact_sqrt(root)) return Surd(root);
  return Surd(Rational(0), Rational(1), value);
}

const Rational& Surd::shared_radicand(const Surd& o) const {
  if (is_rational()) return o.d_;
  if (o.is_rational() || d_ == o.d_) return d_;
  throw DomainError("surd arithmetic with different radicands");
}

int Surd::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Parts disagree: |a| vs |b|*sqrt(d); equality is impossible because d is
  // not a perfect square.
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * d_;
  return lhs > rhs ? sa : sb;
}

double Surd::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(d_.to_double());
}

std::string Surd::to_string() const {
  if (is_rational()) return a_.to_string();
  const std::string root = "sqrt(" + d_.to_string() + ")";
  const std::string b = b_.sign() < 0 ? (-b_).to_string() : b_.to_string();
  if (a_.sign() == 0) return (b_.sign() < 0 ? "-" : "") + b + "*" + root;
  return a_.to_string() + (b_.sign() < 0 ? " - " : " + ") + b + "*" + root;
}

BigInt Surd::floor() const {
  if (is_rational()) return a_.floor();
  auto k = BigInt(static_cast<long long>(std::floor(to_double())));
  while (Surd(Rational(k, 1)) > *this) k -= 1;
  while (Surd(Rational(k + 1, 1)) <= *this) k += 1;
  return k;
}

BigInt Surd::ceil() const {
  BigInt f = floor();
  return Surd(Rational(f, 1)) == *this ? f : BigInt(f + 1);
}

Surd Surd::operator-() const { return Surd(-a_, -b_, d_); }

Surd& Surd::operator+=(const Surd& o) {
  Rational d = shared_radicand(o);
  *this = Surd(a_ + o.a_, b_ + o.b_, std::move(d));
  return *this;
}

Surd& Surd::operator*=(const Surd& o) {
  Rational d = shared_radicand(o);
  Rational a = a_ * o.a_ + b_ * o.b_ * d;
  Rational b = a_ * o.b_ + b_ * o.a_;
  *this = Surd(std::move(a), std::move(b), std::move(d));
  return *this;
}

Surd& Surd::operator/=(const Surd& o) {
  if (o.sign() == 0) throw DomainError("surd division by zero");
  if (o.is_rational()) {
    *this = Surd(a_ / o.a_, b_ / o.a_, d_);
    return *this;
  }
  // Multiply by the conjugate; the norm a^2 - b^2 d is nonzero for d
  // non-square.
  const Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * o.d_;
  Surd conj(o.a_ / norm, -o.b_ / norm, o.d_);
  return *this *= conj;
}

} // namespace sepgraph
