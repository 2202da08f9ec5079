#pragma once

#include <random>
#include <vector>

#include "qfgl/scalar.hpp"
#include "qfgl/series.hpp"

// Every randomized test draws from std::mt19937 seeded with kSeed.
namespace gen {

inline constexpr unsigned kSeed = 20240611;

inline int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Small polynomial in q with integer coefficients.
inline qfgl::Scalar q_polynomial(std::mt19937& rng, int max_degree, int bound) {
  const int degree = uniform(rng, 0, max_degree);
  std::vector<qfgl::Rational> c(static_cast<std::size_t>(2 * degree) + 1);
  for (int k = 0; k <= degree; ++k) c[static_cast<std::size_t>(2 * k)] = uniform(rng, -bound, bound);
  return qfgl::Scalar(qfgl::LaurentPoly(std::move(c), 0));
}

// Polynomial, occasionally divided by a q-integer or by 2.
inline qfgl::Scalar scalar(std::mt19937& rng) {
  qfgl::Scalar x = q_polynomial(rng, 2, 3);
  switch (uniform(rng, 0, 3)) {
    case 0:
      x /= qfgl::Scalar::q_poly({1, 1});
      break;
    case 1:
      x /= qfgl::Scalar(2);
      break;
    default:
      break;
  }
  return x;
}

inline qfgl::Series series(std::mt19937& rng, int order, bool zero_constant = false) {
  qfgl::Series f("T", order);
  for (int k = zero_constant ? 1 : 0; k <= order; ++k) {
    if (uniform(rng, 0, 2) > 0) f.set(k, scalar(rng));
  }
  return f;
}

// Series with f(0) = 0 and f'(0) a unit.
inline qfgl::Series invertible_series(std::mt19937& rng, int order) {
  qfgl::Series f = series(rng, order, true);
  f.set(1, uniform(rng, 0, 1) ? qfgl::Scalar(1) : qfgl::Scalar(uniform(rng, 1, 3)) + qfgl::Scalar::q());
  return f;
}

// Element of K_T with integral q-expansion: polynomial in q plus a multiple of 1/(1 - q^k).
inline qfgl::Scalar virtual_representation(std::mt19937& rng) {
  qfgl::Scalar x = q_polynomial(rng, 4, 3);
  if (uniform(rng, 0, 1)) {
    const int k = uniform(rng, 1, 3);
    x += qfgl::Scalar(uniform(rng, -2, 2)) / (qfgl::Scalar(1) - qfgl::Scalar::q_power(k));
  }
  return x;
}

}  // namespace gen
