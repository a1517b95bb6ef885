#include "sepgraph/beta.hpp"

#include "sepgraph/error.hpp"

#include <cmath>
#include <sstream>

namespace sepgraph {

BetaValue BetaValue::from_square(Rational beta_sq) {
  if (beta_sq.sign() < 0) throw DomainError("beta^2 must be non-negative");
  return BetaValue(std::move(beta_sq));
}

BetaValue BetaValue::exact(const Rational& beta) {
  if (beta.sign() < 0) throw DomainError("beta must be non-negative");
  return BetaValue(beta * beta);
}

BetaValue BetaValue::approx(double beta) {
  if (!(beta >= 0.0)) throw DomainError("beta must be non-negative");
  return BetaValue(beta);
}

const Rational& BetaValue::square() const {
  if (!is_exact()) throw DomainError("approximate beta has no exact square");
  return std::get<Rational>(v_);
}

Surd BetaValue::surd() const { return Surd::sqrt(square()); }

double BetaValue::to_double() const {
  return is_exact() ? std::sqrt(square().to_double()) : std::get<double>(v_);
}

std::string BetaValue::to_string() const {
  if (is_exact()) return surd().to_string();
  std::ostringstream out;
  out.precision(17);
  out << std::get<double>(v_);
  return out.str();
}

} // namespace sepgraph
