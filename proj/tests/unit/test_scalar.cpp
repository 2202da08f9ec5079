#include "doctest.h"
#include "support.hpp"

#include "qfgl/qcomb.hpp"
#include "qfgl/scalar.hpp"

using namespace qfgl;

namespace {
const Scalar q = Scalar::q();
const Scalar one = Scalar(1);
}  // namespace

TEST_CASE("laurent arithmetic and division") {
  const LaurentPoly a({1, 2, 1}, 0);  // (1 + x)^2
  const LaurentPoly b({1, 1}, 0);
  CHECK(poly_exact_div(a, b) == b);
  const auto [quot, rem] = poly_divmod(LaurentPoly({1, 0, 1}, 0), b);
  CHECK(quot == LaurentPoly({-1, 1}, 0));
  CHECK(rem == LaurentPoly(Rational(2)));
  CHECK_THROWS_AS(poly_exact_div(LaurentPoly({1, 0, 1}, 0), b), MathError);
  CHECK(poly_gcd(a, LaurentPoly({1, 0, -1}, 0)) == b);
  CHECK(LaurentPoly({0, 0, 3}, -1).valuation() == 1);
  CHECK(LaurentPoly({1, 1}, 0).substitute_power(3) == LaurentPoly({1, 0, 0, 1}, 0));
}

TEST_CASE("canonical form") {
  CHECK((q * q) / q == q);
  CHECK((one - q * q) / (one - q) == one + q);
  CHECK(one / (one - q) == -one / (q - one));
  CHECK((one / (one - q)).denominator().lowest_coeff() > 0);
  CHECK(Scalar(LaurentPoly({2, 2}, 0), LaurentPoly({4}, 0)) == Scalar(LaurentPoly({1, 1}, 0)) / Scalar(2));
  CHECK_THROWS_AS(one / Scalar(0), MathError);
  CHECK((Scalar(3) / Scalar(6)).as_rational() == Rational(1, 2));
}

TEST_CASE("canonical strings") {
  CHECK((one + q).to_string() == "1 + q");
  CHECK(((one + q) / Scalar(2)).to_string() == "(1 + q)/2");
  CHECK((one / (one - q)).to_string() == "1/(1 - q)");
  CHECK((q - one).to_string() == "-1 + q");
  CHECK(Scalar::q_power(-1).to_string() == "q^-1");
  CHECK((Scalar::s_power(-1) + Scalar::s()).to_string() == "s^-1 + s");
  CHECK(Scalar(0).to_string() == "0");
  CHECK((one - Scalar(2) * q + q * q).to_string() == "1 - 2*q + q^2");
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == q - one);
  CHECK(cyclotomic(2) == one + q);
  CHECK(cyclotomic(6) == one - q + q * q);
  CHECK(cyclotomic(12) == support::parse_q({1, 0, -1, 0, 1}));
  // q^n - 1 = prod_{d | n} Phi_d
  for (int n = 1; n <= 24; ++n) {
    Scalar prod = 1;
    for (int d = 1; d <= n; ++d) {
      if (n % d == 0) prod *= cyclotomic(d);
    }
    CHECK(prod == Scalar::q_power(n) - one);
  }
}

TEST_CASE("ring membership") {
  const RingMembership poly = membership(one + q);
  CHECK(poly.in_Z_q);
  CHECK(poly.in_Z_q_laurent);
  CHECK(poly.in_cromulent);

  const RingMembership laurent = membership(Scalar::q_power(-1));
  CHECK_FALSE(laurent.in_Z_q);
  CHECK(laurent.in_Z_q_laurent);
  CHECK_FALSE(laurent.in_cromulent);

  const RingMembership half = membership(q / Scalar(2));
  CHECK(half.in_Q_q);
  CHECK_FALSE(half.in_Z_q);

  CHECK(membership(Scalar::s()).in_Q_s);
  CHECK_FALSE(membership(Scalar::s()).in_Q_q);
}

TEST_CASE("cromulence") {
  for (int k = 1; k <= 20; ++k) {
    const Scalar x = one / q_int(k);
    CHECK(is_cromulent(x));
    CHECK(eval_q0(x) == 1);
    CHECK(eval_q1(x) == Rational(1, k));
  }
  CHECK_FALSE(is_cromulent(one / (one - q)));
  CHECK(is_cromulent(one / q_fact(6)));
  // 1/(1 - q + q^2) = 1/Phi_6 is cromulent; 1/(1 + q^2 + q) is 1/Phi_3.
  CHECK(is_cromulent(one / cyclotomic(6)));
  CHECK_FALSE(is_cromulent(one / (one + Scalar(2) * q)));
  CHECK_FALSE(is_cromulent(one / Scalar(2)));
  CHECK_THROWS_AS(is_cromulent(Scalar::s()), MathError);
}

TEST_CASE("evaluation at q = 0 and q = 1") {
  CHECK(eval_q0(one / (one - q)) == 1);
  CHECK(eval_q1(q_int(5)) == 5);
  CHECK_THROWS_AS(eval_q1(one / (one - q)), MathError);
  CHECK_THROWS_AS(eval_q0(Scalar::q_power(-1)), MathError);
}
