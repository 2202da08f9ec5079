#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qfgl/scalar.hpp"

namespace qfgl {

// Power series in q with rational coefficients, truncated at an explicit order.
class QSeries {
 public:
  explicit QSeries(int order = 0);
  QSeries(int order, std::vector<Rational> coeffs);

  static QSeries one(int order);
  static QSeries monomial(const Rational& c, int exponent, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const;
  void set(int k, Rational value);
  std::span<const Rational> coefficients() const { return c_; }

  bool has_integer_coefficients() const;
  bool is_zero() const;
  QSeries truncated(int order) const;
  // Multiply by q^k (k >= 0), keeping the order.
  QSeries shifted(int k) const;
  // Requires a non-zero constant term.
  QSeries reciprocal() const;
  // The truncation as a polynomial scalar.
  Scalar to_scalar() const;
  std::optional<int> first_difference(const QSeries& o) const;

  QSeries operator-() const;
  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const Rational& c);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries& a, const QSeries& b) = default;

  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

// Integer powers; negative exponents need a non-zero constant term.
QSeries pow(const QSeries& base, int exponent);

// q-expansion at q = 0. Requires x to live in q without a pole at q = 0.
QSeries q_expand(const Scalar& x, int order);

// Polynomial-in-t truncation with q-series coefficients: t-degree <= t_order,
// every coefficient a QSeries of order q_order.
class QTSeries {
 public:
  QTSeries(int t_order, int q_order);

  static QTSeries one(int t_order, int q_order);

  int t_order() const { return static_cast<int>(c_.size()) - 1; }
  int q_order() const { return q_order_; }
  const QSeries& operator[](int k) const;
  void set(int k, QSeries value);
  Rational coeff(int t_degree, int q_degree) const;
  void add_to(int t_degree, int q_degree, const Rational& value);

  QTSeries truncated(int t_order, int q_order) const;
  // t -> -t.
  QTSeries negate_t() const;
  // Sum of the t-coefficients at t = value.
  QSeries evaluate_t(const Rational& value) const;
  // t -> c q^m (m >= 0), truncated at q_order.
  QSeries substitute_t(const Rational& c, int m) const;
  // t * d/dt log(self); requires an invertible constant term.
  QTSeries t_log_derivative() const;
  // Requires an invertible (non-zero q^0 coefficient) constant term.
  QTSeries reciprocal() const;
  // First (t-degree, q-degree) where the series differ, within common orders.
  std::optional<std::pair<int, int>> first_difference(const QTSeries& o) const;

  QTSeries& operator+=(const QTSeries& o);
  QTSeries& operator-=(const QTSeries& o);
  friend QTSeries operator+(QTSeries a, const QTSeries& b) { return a += b; }
  friend QTSeries operator-(QTSeries a, const QTSeries& b) { return a -= b; }
  friend QTSeries operator*(const QTSeries& a, const QTSeries& b);
  friend bool operator==(const QTSeries& a, const QTSeries& b) = default;

 private:
  int q_order_;
  std::vector<QSeries> c_;
};

}  // namespace qfgl
