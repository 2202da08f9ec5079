#pragma once

#include <iosfwd>
#include <string>

#include "qfgl/laurent.hpp"

namespace qfgl {

// Exact element of Q(s), with q := s^2 the character of the circle.
//
// Canonical form: numerator / denominator with
//   - the denominator a primitive polynomial in Z[s] with non-zero, positive
//     constant term (so every power of s and every sign sits in the numerator),
//   - gcd(numerator, denominator) = 1 over Q.
// Canonical form is unique, so operator== is mathematical equality.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  Scalar(const Integer& value);  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value);  // NOLINT(google-explicit-constructor)
  // Polynomial in s.
  explicit Scalar(LaurentPoly numerator);
  Scalar(LaurentPoly numerator, LaurentPoly denominator);

  static Scalar q() { return q_power(1); }
  static Scalar s() { return s_power(1); }
  static Scalar q_power(int k) { return Scalar(LaurentPoly::monomial(1, 2 * k)); }
  static Scalar s_power(int k) { return Scalar(LaurentPoly::monomial(1, k)); }
  // Polynomial in q from ascending coefficients.
  static Scalar q_poly(std::initializer_list<long> coeffs);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  // Denominator is 1.
  bool is_laurent_polynomial() const { return den_.is_one(); }
  // Every power of s that occurs (numerator and denominator) is even.
  bool lives_in_q() const { return num_.is_even() && den_.is_even(); }
  // Constant value; requires a constant scalar.
  bool is_rational_constant() const { return den_.is_one() && num_.is_constant(); }
  Rational as_rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) = default;

  // Canonical string, e.g. "(1 + q + q^2)/(1 + q)"; switches to s when an
  // odd power of s occurs.
  std::string to_string() const;

 private:
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_{Rational(1)};
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

Scalar pow(const Scalar& base, int exponent);

struct RingMembership {
  bool in_Z_q = false;          // Z[q]
  bool in_Z_q_laurent = false;  // Z[q, q^-1]
  bool in_Q_q = false;          // Q[q]
  bool in_cromulent = false;    // Z[q][ [k]_q^-1 | k >= 1 ]
  bool in_Q_s = true;           // Q(s), always
};

RingMembership membership(const Scalar& x);

// d-th cyclotomic polynomial in q, via Phi_d = (q^d - 1) / prod_{e | d, e < d} Phi_e.
Scalar cyclotomic(int d);

// Membership in the ring obtained from Z[q] by inverting every q-integer.
// Throws MathError if x does not live in q.
bool is_cromulent(const Scalar& x);

// Value at q = 0 (resp. q = 1). Throw MathError on a pole or if x does not live in q.
Rational eval_q0(const Scalar& x);
Rational eval_q1(const Scalar& x);

// Polynomial formatting shared with the CLI: integer coefficients, ascending
// exponents, "c*v^k" terms.
std::string format_poly(const LaurentPoly& p, char variable, int exponent_divisor);

}  // namespace qfgl
