#pragma once

#include "sepgraph/rational.hpp"
#include "sepgraph/surd.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>

// Closed-form bounds as functions of the separation parameter beta.
// Instantiated with Surd (exact beta = sqrt(rational)) or double
// (eigenvalue certificates).
namespace sepgraph::bounds {

template <class T>
T lift(long long v) {
  return T(v);
}
template <class T>
T lift(long long num, long long den) {
  if constexpr (std::is_same_v<T, double>)
    return static_cast<double>(num) / static_cast<double>(den);
  else
    return T(Rational(num, den));
}
template <class T>
T lift(const Rational& r) {
  if constexpr (std::is_same_v<T, double>)
    return r.to_double();
  else
    return T(r);
}

template <class T>
T min_of(const T& a, const T& b) {
  return b < a ? b : a;
}
template <class T>
T max_of(const T& a, const T& b) {
  return a < b ? b : a;
}

/// min{(1-b)/(1+b), 1/2} (n-1)
template <class T>
T weak_matching(const T& beta, int n) {
  return min_of<T>((lift<T>(1) - beta) / (lift<T>(1) + beta), lift<T>(1, 2)) * lift<T>(n - 1);
}

/// min{(2-b)/(2(1+b)), 1/2}
template <class T>
T strong_matching_rate(const T& beta) {
  return min_of<T>((lift<T>(2) - beta) / (lift<T>(2) * (lift<T>(1) + beta)), lift<T>(1, 2));
}

/// min{(2-b)/(2(1+b)), 1/2} (n-1)
template <class T>
T strong_matching(const T& beta, int n) {
  return strong_matching_rate(beta) * lift<T>(n - 1);
}

/// min{(2-b)/(2(1+b)), 1/2} n, for graphs with matching number != (n-1)/2.
template <class T>
T strong_matching_refined(const T& beta, int n) {
  return strong_matching_rate(beta) * lift<T>(n);
}

/// min{t(1-2b^2), 1} |U| with side ratio t = |W|/|U|.
template <class T>
T bipartite_weak(const T& beta, const T& side_ratio, int u) {
  return min_of<T>(side_ratio * (lift<T>(1) - lift<T>(2) * beta * beta), lift<T>(1)) * lift<T>(u);
}

/// min{1/b^2, 1} |U|, beta > 0.
template <class T>
T bipartite_strong(const T& beta, int u) {
  return min_of<T>(lift<T>(1) / (beta * beta), lift<T>(1)) * lift<T>(u);
}

/// min{t/b^2, 1} |U| for (U, W, beta)-bipartite graphs, beta > 0.
template <class T>
T bipartite_profile_matching(const T& beta, const T& side_ratio, int u) {
  return min_of<T>(side_ratio / (beta * beta), lift<T>(1)) * lift<T>(u);
}

/// (1-b)/b, beta > 0.
template <class T>
T strong_toughness(const T& beta) {
  return (lift<T>(1) - beta) / beta;
}

/// (1-b)/(2b)
template <class T>
T weak_t_prime(const T& beta) {
  return (lift<T>(1) - beta) / (lift<T>(2) * beta);
}

/// k(1-b)/(m b) for the k/m toughness forms (5/11 in general, 6/13 for n >= 6).
template <class T>
T weak_toughness_fraction(const T& beta, long long k, long long m) {
  return lift<T>(k) * (lift<T>(1) - beta) / (lift<T>(m) * beta);
}

/// (1/2 - eps)(1-b)/b
template <class T>
T weak_toughness_eps(const T& beta, const Rational& eps) {
  return (lift<T>(1, 2) - lift<T>(eps)) * (lift<T>(1) - beta) / beta;
}

/// 2 eps n >= (1/2 - eps)(1-b)/b + 1, the explicit "n large enough" condition.
template <class T>
bool weak_toughness_eps_condition(const T& beta, const Rational& eps, int n) {
  return !(lift<T>(Rational(2) * eps * Rational(n)) < weak_toughness_eps(beta, eps) + lift<T>(1));
}

/// b n / (1 + b)
template <class T>
T separated_side_cap(const T& beta, int n) {
  return beta * lift<T>(n) / (lift<T>(1) + beta);
}

/// ((1-b)/b) |X|
template <class T>
T separator_size_floor(const T& beta, int x) {
  return (lift<T>(1) - beta) / beta * lift<T>(x);
}

/// (c-1)(1-b)/(2b)
template <class T>
T weak_separator_floor(const T& beta, int c) {
  return lift<T>(c - 1) * (lift<T>(1) - beta) / (lift<T>(2) * beta);
}

/// max{(2b-1)n/(1+b), 0}
template <class T>
T strong_scattering(const T& beta, int n) {
  return max_of<T>((lift<T>(2) * beta - lift<T>(1)) * lift<T>(n) / (lift<T>(1) + beta), lift<T>(0));
}

/// max{((3b-1)n + 2(1-b))/(b+1), 0}
template <class T>
T weak_scattering(const T& beta, int n) {
  return max_of<T>(((lift<T>(3) * beta - lift<T>(1)) * lift<T>(n) + lift<T>(2) * (lift<T>(1) - beta)) /
                       (beta + lift<T>(1)),
                   lift<T>(0));
}

} // namespace sepgraph::bounds
