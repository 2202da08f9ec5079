#include "doctest.h"
#include "support.hpp"

#include "qfgl/qcomb.hpp"

using namespace qfgl;

namespace {
const Scalar q = Scalar::q();
}

TEST_CASE("q-integers, factorials, binomials") {
  CHECK(q_int(0) == 0);
  CHECK(q_int(1) == 1);
  CHECK(q_int(3) == support::parse_q({1, 1, 1}));
  CHECK(q_fact(3) == support::parse_q({1, 2, 2, 1}));
  CHECK(q_fact(0) == 1);
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(q_binom(n, k) == support::scalar_from(oracle::gaussian_binomial(n, k)));
  }
  CHECK_THROWS_AS(q_binom(2, 3), MathError);
  CHECK_THROWS_AS(q_int(-1), MathError);
}

TEST_CASE("finite Pochhammer") {
  const QTSeries p = poch_finite(3, 10);
  // (t;q)_3 = 1 - [3]_q t + q [3]_q t^2 - q^3 t^3
  CHECK(p[0] == QSeries::one(10));
  CHECK(p[1] == q_expand(-q_int(3), 10));
  CHECK(p[2] == q_expand(q * q_int(3), 10));
  CHECK(p[3] == q_expand(-Scalar::q_power(3), 10));
}

TEST_CASE("infinite Pochhammer: sum form equals product form") {
  CHECK(poch_inf_sum(8, 30) == poch_inf_product(8, 30));
  CHECK(poch_inf_sum_coefficient(2) == Scalar::q() / ((Scalar(1) - q) * (Scalar(1) - q * q)));
}

TEST_CASE("Euler function matches the pentagonal pattern") {
  const QSeries phi = euler_phi(30);
  CHECK(phi == support::qseries_from(oracle::euler_product(30), 30));
  const auto pattern = oracle::pentagonal_pattern(30);
  for (int k = 0; k <= 30; ++k) {
    auto it = pattern.find(k);
    CHECK(phi[k] == (it == pattern.end() ? 0 : it->second));
  }
  // to order 15: 1 - q - q^2 + q^5 + q^7 - q^12 - q^15
  CHECK(euler_phi(15).to_scalar() == support::parse_q({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1}));
}

TEST_CASE("discriminant") {
  const QSeries delta = discriminant(12);
  CHECK(delta == support::qseries_from(oracle::discriminant(12), 12));
  CHECK(delta == pow(euler_phi(12), 24).shifted(1));
  CHECK(delta[0] == 0);
  CHECK(delta[1] == 1);
}

TEST_CASE("eta bookkeeping") {
  const EtaElement eta = eta_from_phi(24);
  CHECK(eta.exponent == Rational(1, 24));
  const EtaElement eta24 = eta_pow(eta, 24);
  CHECK(eta24.exponent == 1);
  CHECK(eta_fold(eta24) == discriminant(24));
  const EtaElement unit = eta_mul(eta, eta_inverse(eta));
  CHECK(unit.exponent == 0);
  CHECK(unit.body == QSeries::one(24));
  CHECK_THROWS_AS(eta_fold(eta), MathError);
}
