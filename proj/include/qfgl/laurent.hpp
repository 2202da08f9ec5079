#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qfgl/rational.hpp"

namespace qfgl {

// Laurent polynomial in one variable with rational coefficients, stored densely
// from the lowest non-zero exponent upward. The zero polynomial has no
// coefficients and valuation 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c);
  LaurentPoly(std::vector<Rational> coeffs, int valuation);

  static LaurentPoly monomial(const Rational& c, int exponent);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  // Lowest exponent with a non-zero coefficient (0 for the zero polynomial).
  int valuation() const { return val_; }
  // Highest exponent with a non-zero coefficient (0 for the zero polynomial).
  int degree() const { return coeffs_.empty() ? 0 : val_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t term_count() const;

  Rational coeff(int exponent) const;
  std::span<const Rational> coefficients() const { return coeffs_; }
  const Rational& lowest_coeff() const { return coeffs_.front(); }
  const Rational& highest_coeff() const { return coeffs_.back(); }

  bool has_integer_coefficients() const;
  // True iff every exponent that occurs is even.
  bool is_even() const;
  // lcm of coefficient denominators.
  Integer denominator_lcm() const;
  // gcd of coefficient numerators (after clearing denominators is the caller's job).
  Integer numerator_gcd() const;

  LaurentPoly shifted(int by) const;
  // x -> x^k for k >= 1.
  LaurentPoly substitute_power(int k) const;
  // Exponents divided by two; requires is_even().
  LaurentPoly halve_exponents() const;
  Rational evaluate(const Rational& x) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
  int val_ = 0;
};

// Polynomial helpers. Arguments must have non-negative valuation.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);
// Throws MathError if b does not divide a.
LaurentPoly poly_exact_div(const LaurentPoly& a, const LaurentPoly& b);
// Monic greatest common divisor over Q (1 if both are zero).
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

}  // namespace qfgl
