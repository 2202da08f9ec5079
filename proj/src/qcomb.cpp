#include "qfgl/qcomb.hpp"

namespace qfgl {

Scalar q_int(int k) {
  if (k < 0) throw MathError("q_int: k must be non-negative");
  std::vector<Rational> c(static_cast<std::size_t>(2 * k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(2 * i)] = 1;
  return Scalar(LaurentPoly(std::move(c), 0));
}

Scalar q_fact(int k) {
  if (k < 0) throw MathError("q_fact: k must be non-negative");
  Scalar r(1);
  for (int i = 2; i <= k; ++i) r *= q_int(i);
  return r;
}

Scalar q_binom(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw MathError("q_binom: need 0 <= k <= n");
  return q_fact(n) / (q_fact(k) * q_fact(n - k));
}

QTSeries poch_finite(int n, int q_order) {
  if (n < 0) throw MathError("poch_finite: n must be non-negative");
  QTSeries r = QTSeries::one(n, q_order);
  for (int k = 0; k < n; ++k) {
    QTSeries factor = QTSeries::one(n, q_order);
    factor.set(1, QSeries::monomial(-1, k, q_order));
    r = r * factor;
  }
  return r;
}

QTSeries poch_inf_product(int t_order, int q_order) {
  QTSeries r = QTSeries::one(t_order, q_order);
  if (t_order == 0) return r;
  for (int k = 0; k <= q_order; ++k) {
    QTSeries factor = QTSeries::one(t_order, q_order);
    factor.set(1, QSeries::monomial(-1, k, q_order));
    r = r * factor;
  }
  return r;
}

Scalar poch_inf_sum_coefficient(int k) {
  if (k < 0) throw MathError("poch_inf_sum_coefficient: k must be non-negative");
  const Scalar sign = k % 2 == 0 ? Scalar(1) : Scalar(-1);
  return sign * Scalar::q_power(k * (k - 1) / 2) / (q_fact(k) * pow(Scalar(1) - Scalar::q(), k));
}

QTSeries poch_inf_sum(int t_order, int q_order) {
  QTSeries r(t_order, q_order);
  for (int k = 0; k <= t_order; ++k) r.set(k, q_expand(poch_inf_sum_coefficient(k), q_order));
  return r;
}

QSeries euler_phi(int q_order) {
  QSeries r = QSeries::one(q_order);
  for (int k = 1; k <= q_order; ++k) r = r * (QSeries::one(q_order) - QSeries::monomial(1, k, q_order));
  return r;
}

QSeries discriminant(int q_order) { return pow(euler_phi(q_order), 24).shifted(1); }

EtaElement eta_mul(const EtaElement& a, const EtaElement& b) {
  return {a.exponent + b.exponent, a.body * b.body};
}

EtaElement eta_pow(const EtaElement& a, int k) { return {a.exponent * k, pow(a.body, k)}; }

EtaElement eta_inverse(const EtaElement& a) { return {-a.exponent, a.body.reciprocal()}; }

EtaElement eta_from_phi(int q_order) { return {Rational(1, 24), euler_phi(q_order)}; }

QSeries eta_fold(const EtaElement& a) {
  if (!is_integral(a.exponent) || a.exponent < 0) {
    throw MathError("eta_fold: exponent " + a.exponent.get_str() + " is not a non-negative integer");
  }
  return a.body.shifted(static_cast<int>(a.exponent.get_num().get_si()));
}

}  // namespace qfgl
