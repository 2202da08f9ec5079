#pragma once

#include "qfgl/qseries.hpp"
#include "qfgl/scalar.hpp"

namespace qfgl {

// [k]_q = 1 + q + ... + q^{k-1}; q_int(0) = 0.
Scalar q_int(int k);
// [k]_q! = [1]_q [2]_q ... [k]_q; q_fact(0) = 1.
Scalar q_fact(int k);
// Gaussian binomial [n choose k]_q, 0 <= k <= n.
Scalar q_binom(int n, int k);

// (t; q)_n = prod_{k < n} (1 - t q^k), exact in t (t-order n), q-truncated.
QTSeries poch_finite(int n, int q_order);
// (t; q)_infinity as a product over k = 0..q_order; factors beyond that are
// 1 + O(q^{q_order + 1}) in every t-degree.
QTSeries poch_inf_product(int t_order, int q_order);
// Coefficient of t^k in the sum form: (-1)^k q^{k(k-1)/2} / ((1-q)(1-q^2)...(1-q^k)).
Scalar poch_inf_sum_coefficient(int k);
QTSeries poch_inf_sum(int t_order, int q_order);

// prod_{k >= 1} (1 - q^k), truncated.
QSeries euler_phi(int q_order);
// q * euler_phi^24, truncated.
QSeries discriminant(int q_order);

// q^exponent * body, with a rational exponent tag instead of fractional powers in
// the series itself.
struct EtaElement {
  Rational exponent;
  QSeries body;

  friend bool operator==(const EtaElement&, const EtaElement&) = default;
};

EtaElement eta_mul(const EtaElement& a, const EtaElement& b);
EtaElement eta_pow(const EtaElement& a, int k);
EtaElement eta_inverse(const EtaElement& a);
// eta(q) = q^{1/24} phi(q).
EtaElement eta_from_phi(int q_order);
// Multiplies the prefactor into the body; requires a non-negative integer exponent.
QSeries eta_fold(const EtaElement& a);

}  // namespace qfgl
