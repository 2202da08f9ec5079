#include "doctest.h"
#include "support.hpp"

#include "qfgl/lambda.hpp"
#include "qfgl/qcomb.hpp"

using namespace qfgl;

namespace {
const Scalar q = Scalar::q();
const Scalar geometric = Scalar(1) / (Scalar(1) - q);
}  // namespace

TEST_CASE("Adams operations") {
  for (int k = 1; k <= 10; ++k) {
    CHECK(adams(geometric, k) == Scalar(1) / (Scalar(1) - Scalar::q_power(k)));
    CHECK(adams(q, k) == Scalar::q_power(k));
  }
  CHECK(adams(Scalar(7), 3) == 7);
  CHECK_THROWS_AS(adams(Scalar::s(), 2), MathError);
  CHECK_THROWS_AS(adams(q, 0), MathError);
}

TEST_CASE("lambda_t of lines and sums") {
  // lambda_t(q^2) = 1 + t q^2
  const WittElement line = lambda_t(q_expandable(q * q, 6), 3);
  CHECK(line.body.coeff(1, 2) == 1);
  CHECK(line.body[2].is_zero());
  // lambda_t(2) = (1 + t)^2
  const WittElement two = lambda_t(q_expandable(Scalar(2), 4), 3);
  CHECK(two.body.coeff(1, 0) == 2);
  CHECK(two.body.coeff(2, 0) == 1);
  // lambda_t(-1) = 1/(1 + t)
  const WittElement minus_one = lambda_t(q_expandable(Scalar(-1), 4), 4);
  for (int k = 0; k <= 4; ++k) CHECK(minus_one.body.coeff(k, 0) == (k % 2 ? -1 : 1));
  CHECK_THROWS_AS(lambda_t(q_expandable(Scalar(1) / Scalar(2), 4), 2), MathError);
}

TEST_CASE("Witt group operations") {
  const WittElement a = lambda_t(q_expandable(Scalar(1) + q, 8), 4);
  const WittElement b = lambda_t(q_expandable(Scalar(3) - q * q, 8), 4);
  const WittElement sum = lambda_t(q_expandable(Scalar(4) + q - q * q, 8), 4);
  CHECK(witt_add(a, b) == sum);
  CHECK(witt_add(a, witt_negate(a)) == witt_unit(4, 8));
  // ghost components of lambda_t(a) are psi^n(a)
  for (int n = 1; n <= 4; ++n) CHECK(witt_ghost(a, n) == q_expand(adams(Scalar(1) + q, n), 8));
}

TEST_CASE("Newton extraction of Adams operations") {
  const WittElement w = lambda_t(q_expandable(geometric, 30), 10);
  const std::vector<QSeries> psi = newton_adams_from_lambda(w, 10);
  for (int k = 1; k <= 10; ++k) CHECK(psi[static_cast<std::size_t>(k - 1)] == q_expand(adams(geometric, k), 30));
  CHECK_THROWS_AS(newton_adams_from_lambda(w, 11), MathError);
}

TEST_CASE("elementary symmetric oracle") {
  for (int k = 0; k <= 8; ++k) {
    CHECK(elementary_geometric(k, 30) == support::qseries_from(oracle::elementary_by_subsets(k, 30), 30));
  }
}

TEST_CASE("lambda^k of (1 - q)^-1 selects exponent k(k-1)/2") {
  for (int k = 1; k <= 8; ++k) {
    const LambdaKResult r = lambda_k_closed(k, 30);
    CHECK(r.witt_matches_oracle);
    CHECK(r.binomial_matches);
    CHECK_FALSE(r.triangular_matches);
    CHECK(r.verdict == LambdaVerdict::kBinomial);
    CHECK(r.binomial_variant == Scalar::q_power(k * (k - 1) / 2) / (q_fact(k) * pow(Scalar(1) - q, k)));
  }
  CHECK(to_string(LambdaVerdict::kBinomial) == "exponent k(k-1)/2");
}

TEST_CASE("lambda_{-t}((1 - q)^-1) is (t; q)_infinity") {
  const WittElement w = lambda_t(q_expandable(geometric, 30), 8);
  CHECK(w.body.negate_t() == poch_inf_product(8, 30));
}

TEST_CASE("Thom class") {
  const ThomClassResult r = thom_class(30);
  CHECK(r.value == euler_phi(30));
  CHECK(r.literal.is_zero());
}

TEST_CASE("discriminant from 24/(1 - q)") {
  const Exercise32Result r = exercise32(30);
  CHECK(r.mobius_value == Scalar(24) / (Scalar(1) - q));
  CHECK(r.shift_substitution == discriminant(30));
  CHECK(r.direct_substitution.is_zero());
  CHECK(r.selected == "b");
  CHECK_FALSE(r.report.all_passed());
  CHECK(r.report.find("(b) t = q, shifting the n = 0 factor")->passed);
}
