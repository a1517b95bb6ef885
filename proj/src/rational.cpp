#include "sepgraph/rational.hpp"

#include "sepgraph/error.hpp"

#include <cctype>
#include <limits>

namespace sepgraph {

namespace mp = boost::multiprecision;

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mp::cpp_rational(num, den);
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&] { return DomainError("not a rational number: '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string_view s, bool allow_sign) {
    if (s.empty()) throw fail();
    std::size_t i = 0;
    bool neg = false;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw fail();
    BigInt v = 0;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw fail();
      v = v * 10 + (s[i] - '0');
    }
    return neg ? BigInt(-v) : v;
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt den = parse_int(text.substr(slash + 1), false);
    if (den == 0) throw fail();
    return Rational(parse_int(text.substr(0, slash), true), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.remove_prefix(1);
    if (whole.empty() && frac.empty()) throw fail();
    BigInt w = whole.empty() ? BigInt(0) : parse_int(whole, false);
    BigInt f = frac.empty() ? BigInt(0) : parse_int(frac, false);
    BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    BigInt num = w * scale + f;
    return Rational(neg ? BigInt(-num) : num, scale);
  }
  return Rational(parse_int(text, true), BigInt(1));
}

BigInt Rational::numerator() const { return mp::numerator(v_); }
BigInt Rational::denominator() const { return mp::denominator(v_); }

int Rational::sign() const { return v_.sign(); }

double Rational::to_double() const { return v_.convert_to<double>(); }

std::string Rational::to_string() const {
  return numerator().str() + "/" + denominator().str();
}

BigInt Rational::floor() const {
  BigInt q = numerator() / denominator(); // truncates toward zero
  if (sign() < 0 && q * denominator() != numerator()) q -= 1;
  return q;
}

BigInt Rational::ceil() const {
  BigInt q = numerator() / denominator();
  if (sign() > 0 && q * denominator() != numerator()) q += 1;
  return q;
}

bool Rational::exact_sqrt(Rational& root) const {
  if (sign() < 0) return false;
  BigInt num = numerator();
  BigInt den = denominator();
  BigInt rn = mp::sqrt(num);
  BigInt rd = mp::sqrt(den);
  if (rn * rn != num || rd * rd != den) return false;
  root = Rational(rn, rd);
  return true;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

const Rational& ExtRational::value() const {
  if (!finite_) throw DomainError("value() of an infinite ExtRational");
  return value_;
}

double ExtRational::to_double() const {
  return finite_ ? value_.to_double() : std::numeric_limits<double>::infinity();
}

} // namespace sepgraph
