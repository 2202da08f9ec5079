#include "doctest.h"

#include <sstream>

#include "qfgl/fgl.hpp"
#include "qfgl/varieties.hpp"

using namespace qfgl;

namespace {
const Scalar q = Scalar::q();

Variety cp(std::vector<int> factors) { return product_of_projective_spaces(std::move(factors)); }
}  // namespace

TEST_CASE("Hodge polynomials") {
  const HodgePoly cp2 = hodge(cp({2}));
  CHECK(cp2.coeff(0, 0) == 1);
  CHECK(cp2.coeff(1, 1) == 1);
  CHECK(cp2.coeff(2, 2) == 1);
  CHECK(cp2.terms().size() == 3);
  CHECK(hodge(cp({})) == HodgePoly::one());
  const HodgePoly p1p1 = hodge(cp({1, 1}));
  CHECK(p1p1.coeff(1, 1) == 2);
  CHECK(p1p1 == hodge(cp({1})) * hodge(cp({1})));
  CHECK(p1p1.is_symmetric());
  CHECK(p1p1.to_string() == "1 + 2*Y*Z + Y^2*Z^2");
}

TEST_CASE("Euler characteristic specialization") {
  const EulerSpecialization cp2 = euler_specialize(hodge(cp({2})), 2);
  CHECK(cp2.chi == 3);
  CHECK(cp2.ok);
  // literal Y -> iY, Z -> iY gives 1 - Y^2 + Y^4 for CP^2
  CHECK(cp2.literal_real == std::map<int, long long>{{0, 1}, {2, -1}, {4, 1}});
  CHECK(euler_specialize(hodge(cp({})), 0).chi == 1);
  CHECK(euler_specialize(hodge(cp({1, 1})), 2).chi == 4);
  CHECK(euler_specialize(hodge(cp({1})), 1).chi == 2);
  HodgePoly odd;
  odd.add(1, 0, 1);
  odd.add(0, 1, 1);
  odd.add(0, 0, 1);
  const EulerSpecialization curve = euler_specialize(odd, 1);
  CHECK(curve.chi == -1);
  CHECK_FALSE(curve.ok);
  CHECK(curve.literal_has_imaginary_part);
}

TEST_CASE("YZ -> q") {
  CHECK(yz_to_q(hodge(cp({3}))) == Scalar::q_poly({1, 1, 1, 1}));
  CHECK(yz_to_q(HodgePoly::one()) == 1);
  CHECK(yz_to_q(hodge(cp({1, 1}))) == Scalar::q_poly({1, 2, 1}));
  HodgePoly off;
  off.add(1, 0, 1);
  CHECK_THROWS_AS(yz_to_q(off), MathError);
}

TEST_CASE("Clebsch-Gordan and characters") {
  const SL2Rep v0 = SL2Rep::irreducible(0);
  const SL2Rep v1 = SL2Rep::irreducible(1);
  const SL2Rep v2 = SL2Rep::irreducible(2);
  CHECK(cg_tensor(v1, v1) == v2 + v0);
  CHECK(cg_tensor(v2, v1) == SL2Rep::irreducible(3) + v1);
  CHECK(cg_tensor(v0, v2 + v1) == v2 + v1);
  CHECK(character(v1) == Scalar::s() + Scalar::s_power(-1));
  CHECK(character(v2 + v0) == Scalar::s_power(2) + Scalar(2) + Scalar::s_power(-2));
  CHECK(character(cg_tensor(v1, v1)) == character(v1) * character(v1));
  CHECK(rep_from_character(character(v2 + v1 + v1)) == v2 + v1 + v1);
  CHECK_THROWS_AS(rep_from_character(Scalar::s()), MathError);
  CHECK((v2 + v1 + v1).to_string() == "V2 + 2*V1");
  CHECK((v1 + SL2Rep::irreducible(0, -1)).is_virtual());
}

TEST_CASE("normalized quantum dimension") {
  for (int n = 0; n <= 6; ++n) CHECK(qdim_normalized(SL2Rep::irreducible(n)) == cp_image(n));
  const SL2Rep v2v0 = SL2Rep::irreducible(2) + SL2Rep::irreducible(0);
  CHECK(qdim_normalized(v2v0) == Scalar::q_poly({1, 2, 1}));
  CHECK_THROWS_AS(qdim_normalized(SL2Rep::irreducible(1, -1)), MathError);
}

TEST_CASE("exterior powers") {
  const SL2Rep v1 = SL2Rep::irreducible(1);
  const SL2Rep v2 = SL2Rep::irreducible(2);
  CHECK(lambda_rep(v1, 2) == SL2Rep::irreducible(0));
  CHECK(lambda_rep(v2, 1) == v2);
  CHECK(lambda_rep(v2, 2) == v2);
  CHECK(lambda_rep(v2, 3) == SL2Rep::irreducible(0));
  CHECK(lambda_rep(v1, 3) == SL2Rep{});
  // lambda^2(V3) = V4 + V0
  CHECK(lambda_rep(SL2Rep::irreducible(3), 2) == SL2Rep::irreducible(4) + SL2Rep::irreducible(0));
}

TEST_CASE("representations of varieties") {
  CHECK(rep_of_variety(cp({4})) == SL2Rep::irreducible(4));
  CHECK(rep_of_variety(cp({})) == SL2Rep::irreducible(0));
  CHECK(rep_of_variety(cp({1, 1})) == SL2Rep::irreducible(2) + SL2Rep::irreducible(0));
}

TEST_CASE("diagram check") {
  CHECK(diagram_check(cp({2})).all_passed());
  CHECK(diagram_check(cp({})).all_passed());
  const VerificationReport r = diagram_check(cp({1, 2}));
  CHECK(r.all_passed());
  CHECK(r.checks().size() == 3);
  CHECK(yz_to_q(hodge(cp({1, 2}))) == Scalar::q_poly({1, 1}) * Scalar::q_poly({1, 1, 1}));
  const auto all = enumerate_products(3, 4);
  CHECK(all.size() == 125);
  CHECK(all.front().name == "CP0xCP0xCP0");
  for (const Variety& v : all) CHECK(diagram_check(v).all_passed());
}

TEST_CASE("catalog parsing") {
  std::istringstream in("# products\nquadric 1 1\n\npt\nflag 1 2 \n");
  const auto v = parse_catalog(in);
  REQUIRE(v.size() == 3);
  CHECK(v[0].name == "quadric");
  CHECK(v[0].factors == std::vector<int>{1, 1});
  CHECK(v[1].factors.empty());
  CHECK(v[2].dimension() == 3);
  std::istringstream bad("ok 1\nbroken 1 x\n");
  try {
    parse_catalog(bad);
    FAIL("expected a CatalogError");
  } catch (const CatalogError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream negative("neg -1\n");
  CHECK_THROWS_AS(parse_catalog(negative), CatalogError);
}
