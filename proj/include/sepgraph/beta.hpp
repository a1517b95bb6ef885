#pragma once

#include "sepgraph/rational.hpp"
#include "sepgraph/surd.hpp"

#include <string>
#include <variant>

namespace sepgraph {

/// Comparison slack applied to floating-point beta values.
inline constexpr double kBetaSlack = 1e-9;

/// A separation parameter beta >= 0, either exact (held as beta^2, so that
/// beta = sqrt of a rational) or a floating-point approximation.
class BetaValue {
public:
  static BetaValue from_square(Rational beta_sq);
  static BetaValue exact(const Rational& beta);
  static BetaValue approx(double beta);

  bool is_exact() const { return std::holds_alternative<Rational>(v_); }
  /// Throws DomainError for approximate values.
  const Rational& square() const;
  /// Exact beta as a surd; throws for approximate values.
  Surd surd() const;
  double to_double() const;
  std::string to_string() const;

private:
  explicit BetaValue(std::variant<Rational, double> v) : v_(std::move(v)) {}
  std::variant<Rational, double> v_;
};

} // namespace sepgraph
