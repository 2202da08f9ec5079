#include "qfgl/mobius.hpp"

namespace qfgl {

Mobius::Mobius(Scalar a, Scalar b, Scalar c, Scalar d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if ((a_ * d_ - b_ * c_).is_zero()) throw MathError("Mobius matrix is singular");
}

Mobius Mobius::scaled_identity(const Scalar& lambda) { return Mobius(lambda, 0, 0, lambda); }

Mobius mob_mul(const Mobius& l, const Mobius& r) {
  return Mobius(l.a() * r.a() + l.b() * r.c(), l.a() * r.b() + l.b() * r.d(),
                l.c() * r.a() + l.d() * r.c(), l.c() * r.b() + l.d() * r.d());
}

Scalar mob_det(const Mobius& m) { return m.a() * m.d() - m.b() * m.c(); }

Mobius Q_matrix() { return Mobius(-Scalar::q(), 1, -1, 1); }

Mobius Q_inv_matrix() { return Mobius(1, -1, 1, -Scalar::q()); }

Series mob_apply(const Mobius& m, const Series& f) {
  const Series one = Series::constant(f.variable(), f.order(), Scalar(1));
  const Series num = f * m.a() + one * m.b();
  const Series den = f * m.c() + one * m.d();
  if (den[0].is_zero()) throw MathError("mob_apply: denominator has non-invertible constant term");
  return num / den;
}

Scalar mob_eval(const Mobius& m, const Scalar& x) {
  const Scalar den = m.c() * x + m.d();
  if (den.is_zero()) throw MathError("mob_eval: point maps to infinity");
  return (m.a() * x + m.b()) / den;
}

}  // namespace qfgl
