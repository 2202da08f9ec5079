#include "doctest.h"

#include "qfgl/mobius.hpp"

using namespace qfgl;

namespace {
const Scalar q = Scalar::q();
}

TEST_CASE("Q and its adjugate") {
  const Mobius det_identity = Mobius::scaled_identity(Scalar(1) - q);
  CHECK(mob_mul(Q_matrix(), Q_inv_matrix()) == det_identity);
  CHECK(mob_mul(Q_inv_matrix(), Q_matrix()) == det_identity);
  CHECK(mob_det(Q_matrix()) == Scalar(1) - q);
  CHECK(mob_det(Q_inv_matrix()) == Scalar(1) - q);
  CHECK(mob_mul(Mobius::identity(), Q_matrix()) == Q_matrix());
}

TEST_CASE("singular matrices are rejected") {
  CHECK_THROWS_AS(Mobius(1, 2, 2, 4), MathError);
  CHECK_THROWS_AS(Mobius(q, q, 1, 1), MathError);
}

TEST_CASE("action on series") {
  const Series t = Series::identity("T", 6);
  const Series bracket = mob_apply(Q_matrix(), t);
  // (1 - qT)/(1 - T) = 1 + (1 - q)(T + T^2 + ...)
  CHECK(bracket[0] == 1);
  for (int k = 1; k <= 6; ++k) CHECK(bracket[k] == Scalar(1) - q);
  // scalar multiples act trivially
  CHECK(mob_apply(Q_inv_matrix(), bracket) == t);
  CHECK(mob_apply(Mobius::scaled_identity(q), bracket) == bracket);
}

TEST_CASE("action at a point") {
  CHECK(mob_eval(Mobius(0, 24, -1, 1), q) == Scalar(24) / (Scalar(1) - q));
  CHECK(mob_eval(Q_matrix(), 0) == 1);
  CHECK_THROWS_AS(mob_eval(Q_matrix(), 1), MathError);
}
