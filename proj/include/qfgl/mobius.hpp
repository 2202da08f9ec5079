#pragma once

#include "qfgl/scalar.hpp"
#include "qfgl/series.hpp"

namespace qfgl {

// 2x2 matrix [[a, b], [c, d]] acting by T -> (aT + b)/(cT + d).
class Mobius {
 public:
  // Throws MathError when ad - bc = 0.
  Mobius(Scalar a, Scalar b, Scalar c, Scalar d);

  static Mobius identity() { return scaled_identity(Scalar(1)); }
  static Mobius scaled_identity(const Scalar& lambda);

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& c() const { return c_; }
  const Scalar& d() const { return d_; }

  friend bool operator==(const Mobius&, const Mobius&) = default;

 private:
  Scalar a_, b_, c_, d_;
};

Mobius mob_mul(const Mobius& lhs, const Mobius& rhs);
Scalar mob_det(const Mobius& m);

// [Q] = [[-q, 1], [-1, 1]] and [Q^-1] = [[1, -1], [1, -q]].
Mobius Q_matrix();
Mobius Q_inv_matrix();

// (a f + b)/(c f + d) as a truncated series; the denominator needs an
// invertible constant term.
Series mob_apply(const Mobius& m, const Series& f);
// (a x + b)/(c x + d) at a scalar point.
Scalar mob_eval(const Mobius& m, const Scalar& x);

}  // namespace qfgl
